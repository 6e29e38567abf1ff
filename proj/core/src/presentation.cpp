#include "sepdiff/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "sepdiff/error.hpp"

namespace sepdiff {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

const FieldPresentation::Data& FieldPresentation::data() const {
    if (!d_) fail(Errc::Internal, "use of an empty field presentation");
    return *d_;
}

const std::string& FieldPresentation::var_name(std::uint32_t slot) const {
    return data().names.at(slot);
}

std::optional<std::uint32_t> FieldPresentation::slot_of(const std::string& name) const {
    const auto& names = data().names;
    for (std::uint32_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

bool operator==(const FieldPresentation& a, const FieldPresentation& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->p == b.d_->p && a.d_->constant_gens == b.d_->constant_gens &&
           a.d_->has_diff_gen == b.d_->has_diff_gen;
}

std::string FieldPresentation::to_string() const {
    std::ostringstream os;
    os << "GF(" << characteristic() << ")(";
    const auto& gens = constant_gens();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << gens[i];
    }
    if (has_diff_gen()) os << ";t";
    os << ")";
    return os.str();
}

FieldPresentation make_presentation(fp_t p, std::vector<std::string> constant_gens,
                                    bool has_diff_gen) {
    if (!is_prime_u64(p) || p >= (fp_t(1) << 31))
        fail(Errc::NonPrimeCharacteristic,
             "characteristic must be a prime below 2^31, got " + std::to_string(p));
    std::set<std::string> seen;
    for (const auto& g : constant_gens) {
        if (!valid_name(g))
            fail(Errc::ReservedName, "invalid generator name '" + g + "'");
        // "t" is the distinguished differential generator
        if (g == "t")
            fail(Errc::ReservedName, "generator name '" + g + "' is reserved");
        if (!seen.insert(g).second)
            fail(Errc::DuplicateGeneratorName, "duplicate generator name '" + g + "'");
    }
    auto data = std::make_shared<FieldPresentation::Data>();
    data->p = p;
    data->constant_gens = std::move(constant_gens);
    data->has_diff_gen = has_diff_gen;
    data->names = data->constant_gens;
    if (has_diff_gen) data->names.push_back("t");
    return FieldPresentation(std::move(data));
}

}  // namespace sepdiff
