#pragma once

#include <random>

#include "sepdiff/diffpoly.hpp"

namespace sepdiff {

// Deterministic sample generators for property suites. Everything is driven
// by one mt19937_64 stream, so a fixed seed reproduces a run exactly.
class Sampler {
public:
    Sampler(FieldPresentation K, std::uint64_t seed) : K_(std::move(K)), rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    const FieldPresentation& field() const { return K_; }

    fp_t scalar();
    std::uint32_t below(std::uint32_t bound);  // uniform in [0, bound)

    GfPoly poly(std::uint32_t max_deg, std::uint32_t max_terms);
    RationalFunction element(std::uint32_t max_deg = 2, std::uint32_t max_terms = 3);
    RationalFunction nonzero_element(std::uint32_t max_deg = 2,
                                     std::uint32_t max_terms = 3);
    // Element of C_K: a rational function of the constant generators and t^p.
    RationalFunction constant_element(std::uint32_t max_deg = 2,
                                      std::uint32_t max_terms = 3);
    // Requires a presentation with t; resamples until delta(a) != 0.
    RationalFunction nonconstant_element(std::uint32_t max_deg = 2,
                                         std::uint32_t max_terms = 3);

    DiffPoly dpoly(std::uint32_t arity, std::uint32_t max_order, std::uint32_t max_deg,
                   std::uint32_t max_terms, std::uint32_t coef_deg = 2);
    DiffPoly nonzero_dpoly(std::uint32_t arity, std::uint32_t max_order,
                           std::uint32_t max_deg, std::uint32_t max_terms,
                           std::uint32_t coef_deg = 2);

private:
    FieldPresentation K_;
    std::mt19937_64 rng_;
};

}  // namespace sepdiff
