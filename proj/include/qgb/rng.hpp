#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "qgb/field.hpp"
#include "qgb/matrix.hpp"

namespace qgb {

// Deterministic random source.  All randomized algorithms take an explicit
// seed and derive everything from an Rng so runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }

    Scalar scalar(const Field* f) {
        if (!f->finite())
            return f->from_int(static_cast<long>(next(9)) - 4);
        // Sample base-p digits little-endian, then hand the combined integer
        // representative to the field.
        mpz_class rep = 0;
        std::vector<std::uint64_t> digits(f->degree());
        for (auto& d : digits) d = next(f->characteristic());
        for (unsigned i = f->degree(); i-- > 0;) {
            rep *= f->characteristic();
            rep += digits[i];
        }
        return f->element(rep);
    }

    Scalar unit(const Field* f) {
        for (int tries = 0; tries < 256; ++tries) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
        throw std::logic_error("random unit generation failed");
    }

    Matrix invertible(const Field* f, unsigned n) {
        for (int tries = 0; tries < 256; ++tries) {
            Matrix m(f, n, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) m.at(i, j) = scalar(f);
            if (m.inverse()) return m;
        }
        throw std::logic_error("random invertible matrix generation failed");
    }

private:
    std::mt19937_64 eng_;
};

} // namespace qgb
