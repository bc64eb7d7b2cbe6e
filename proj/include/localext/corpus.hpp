#pragma once

#include "localext/poly.hpp"

#include <cstdint>
#include <vector>

namespace localext {

struct CorpusOptions {
    long p = 3;
    long degree = 3;
    long count = 100;
    std::uint64_t seed = 42;
    long height = 729;  // bound on |numerator| and denominator of every coefficient
};

// Deterministic mixture of uniform polynomials, perturbed powers (x - c)^n + sum p^k b_i x^i and
// their images under x -> (a x + b) / c. Only certified irreducible polynomials are kept.
std::vector<Poly> generate_corpus(const CorpusOptions& opts);

long poly_height(const Poly& f);

}  // namespace localext
