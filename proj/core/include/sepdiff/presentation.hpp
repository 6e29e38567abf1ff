#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepdiff/gfp.hpp"

namespace sepdiff {

// A concrete computable differential field K = GF(p)(c1,...,cm)(t) with
// delta(ci) = 0 and delta(t) = 1, or K = GF(p)(c1,...,cm) with the trivial
// derivation when the distinguished generator t is absent.
//
// Variable layout used by every polynomial over K: slots 0..m-1 hold the
// constant generators in declaration order, slot m holds t when present.
class FieldPresentation {
public:
    FieldPresentation() = default;

    fp_t characteristic() const { return data().p; }
    const std::vector<std::string>& constant_gens() const { return data().constant_gens; }
    bool has_diff_gen() const { return data().has_diff_gen; }

    std::uint32_t num_constant_gens() const {
        return std::uint32_t(data().constant_gens.size());
    }
    std::uint32_t num_vars() const {
        return num_constant_gens() + (has_diff_gen() ? 1 : 0);
    }
    std::optional<std::uint32_t> t_slot() const {
        if (!has_diff_gen()) return std::nullopt;
        return num_constant_gens();
    }

    const std::string& var_name(std::uint32_t slot) const;
    std::optional<std::uint32_t> slot_of(const std::string& name) const;
    const std::vector<std::string>& all_var_names() const { return data().names; }

    bool valid() const { return d_ != nullptr; }
    friend bool operator==(const FieldPresentation& a, const FieldPresentation& b);

    // Grammar form, e.g. "GF(3)(c;t)", "GF(2)(t1,t2)", "GF(5)(;t)".
    std::string to_string() const;

private:
    struct Data {
        fp_t p = 0;
        std::vector<std::string> constant_gens;
        bool has_diff_gen = false;
        std::vector<std::string> names;  // constant gens, then "t" if present
    };

    explicit FieldPresentation(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    const Data& data() const;

    std::shared_ptr<const Data> d_;

    friend FieldPresentation make_presentation(fp_t, std::vector<std::string>, bool);
};

// Validates the characteristic and generator names.
// Errors: NonPrimeCharacteristic, DuplicateGeneratorName, ReservedName.
FieldPresentation make_presentation(fp_t p, std::vector<std::string> constant_gens,
                                    bool has_diff_gen);

}  // namespace sepdiff
