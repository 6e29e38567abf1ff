#include "sepdiff/gfp_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sepdiff/error.hpp"

namespace sepdiff {

fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
    fp_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

fp_t fp_inv(fp_t a, fp_t p) {
    if (a == 0) fail(Errc::Internal, "inverse of zero in GF(p)");
    return fp_pow(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int compare_monomials(const Exponents& a, const Exponents& b) {
    std::uint64_t da = GfPoly::degree_total(a), db = GfPoly::degree_total(b);
    if (da != db) return da < db ? -1 : 1;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

std::uint64_t GfPoly::degree_total(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GfPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_total(terms_[0].mono) == 0);
}

fp_t GfPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) fail(Errc::Internal, "constant_value on nonconstant polynomial");
    return terms_[0].coef;
}

const GfPoly::Term& GfPoly::leading_term() const {
    if (terms_.empty()) fail(Errc::Internal, "leading term of zero polynomial");
    return terms_[0];
}

std::uint64_t GfPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, degree_total(t.mono));
    return d;
}

std::uint32_t GfPoly::degree_in(std::uint32_t slot) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        if (slot < t.mono.size()) d = std::max(d, t.mono[slot]);
    return d;
}

bool GfPoly::uses(std::uint32_t slot) const { return degree_in(slot) > 0; }

std::int64_t GfPoly::max_used_slot() const {
    std::int64_t m = -1;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] > 0) m = std::max<std::int64_t>(m, std::int64_t(i));
    return m;
}

void GfPoly::normalize() {
    for (auto& t : terms_) {
        t.mono.resize(nvars_, 0);
        t.coef %= p_;
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return compare_monomials(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef = fp_add(out.back().coef, t.coef, p_);
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    terms_ = std::move(out);
}

GfPoly GfPoly::constant(fp_t p, std::uint32_t nvars, fp_t value) {
    GfPoly r(p, nvars);
    value %= p;
    if (value != 0) r.terms_.push_back({Exponents(nvars, 0), value});
    return r;
}

GfPoly GfPoly::variable(fp_t p, std::uint32_t nvars, std::uint32_t slot, std::uint32_t exp) {
    if (slot >= nvars) fail(Errc::Internal, "variable slot out of range");
    if (exp == 0) return constant(p, nvars, 1);
    GfPoly r(p, nvars);
    Exponents e(nvars, 0);
    e[slot] = exp;
    r.terms_.push_back({std::move(e), 1 % p});
    r.normalize();
    return r;
}

GfPoly GfPoly::from_terms(fp_t p, std::uint32_t nvars, std::vector<Term> terms) {
    GfPoly r(p, nvars);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

GfPoly GfPoly::operator-() const {
    GfPoly r = *this;
    for (auto& t : r.terms_) t.coef = fp_neg(t.coef, p_);
    return r;
}

GfPoly operator+(const GfPoly& a, const GfPoly& b) {
    if (a.p_ != b.p_ || a.nvars_ != b.nvars_)
        fail(Errc::Internal, "mixed polynomial rings in +");
    GfPoly r(a.p_, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = compare_monomials(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            fp_t s = fp_add(a.terms_[i].coef, b.terms_[j].coef, a.p_);
            if (s != 0) r.terms_.push_back({a.terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

GfPoly operator-(const GfPoly& a, const GfPoly& b) { return a + (-b); }

GfPoly operator*(const GfPoly& a, const GfPoly& b) {
    if (a.p_ != b.p_ || a.nvars_ != b.nvars_)
        fail(Errc::Internal, "mixed polynomial rings in *");
    GfPoly r(a.p_, a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Exponents, fp_t, decltype([](const Exponents& x, const Exponents& y) {
                 return compare_monomials(x, y) > 0;
             })>
        acc;
    Exponents m(a.nvars_, 0);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::uint32_t k = 0; k < a.nvars_; ++k)
                m[k] = ta.mono[k] + tb.mono[k];
            fp_t& slot = acc[m];
            slot = fp_add(slot, fp_mul(ta.coef, tb.coef, a.p_), a.p_);
        }
    }
    for (auto& [mono, coef] : acc)
        if (coef != 0) r.terms_.push_back({mono, coef});
    return r;
}

GfPoly GfPoly::scaled(fp_t c) const {
    c %= p_;
    GfPoly r(p_, nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = fp_mul(t.coef, c, p_);
    return r;
}

GfPoly GfPoly::mul_monomial(const Exponents& mono, fp_t coef) const {
    coef %= p_;
    GfPoly r(p_, nvars_);
    if (coef == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        for (std::size_t k = 0; k < mono.size() && k < t.mono.size(); ++k)
            t.mono[k] += mono[k];
        t.coef = fp_mul(t.coef, coef, p_);
    }
    return r;
}

GfPoly GfPoly::pow(std::uint32_t e) const {
    GfPoly r = constant(p_, nvars_, 1);
    GfPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

GfPoly GfPoly::derivative(std::uint32_t slot) const {
    GfPoly r(p_, nvars_);
    for (const auto& t : terms_) {
        std::uint32_t e = slot < t.mono.size() ? t.mono[slot] : 0;
        fp_t c = fp_mul(t.coef, e % p_, p_);
        if (c == 0) continue;
        Term nt = t;
        nt.mono[slot] = e - 1;
        nt.coef = c;
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

GfPoly GfPoly::coefficient_of(std::uint32_t slot, std::uint32_t k) const {
    GfPoly r(p_, nvars_);
    for (const auto& t : terms_) {
        if ((slot < t.mono.size() ? t.mono[slot] : 0) != k) continue;
        Term nt = t;
        nt.mono[slot] = 0;
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

GfPoly GfPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(terms_[0].coef, p_));
}

std::optional<GfPoly> GfPoly::try_divide_exact(const GfPoly& a, const GfPoly& b) {
    if (b.is_zero()) return std::nullopt;
    GfPoly q(a.p_, a.nvars_);
    GfPoly rem = a;
    const Term& lb = b.leading_term();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading_term();
        Exponents diff(a.nvars_, 0);
        bool ok = true;
        for (std::uint32_t k = 0; k < a.nvars_; ++k) {
            if (lr.mono[k] < lb.mono[k]) {
                ok = false;
                break;
            }
            diff[k] = lr.mono[k] - lb.mono[k];
        }
        if (!ok) return std::nullopt;
        fp_t c = fp_mul(lr.coef, fp_inv(lb.coef, a.p_), a.p_);
        GfPoly step(a.p_, a.nvars_);
        step.terms_.push_back({diff, c});
        q = q + step;
        rem = rem - b.mul_monomial(diff, c);
    }
    return q;
}

namespace {

// Pseudo-remainder of a by b in the single slot v (deg_v b >= 1).
GfPoly prem_slot(const GfPoly& a, const GfPoly& b, std::uint32_t v) {
    GfPoly r = a;
    std::uint32_t db = b.degree_in(v);
    GfPoly lcb = b.coefficient_of(v, db);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        std::uint32_t dr = r.degree_in(v);
        GfPoly lcr = r.coefficient_of(v, dr);
        GfPoly shift = GfPoly::variable(a.characteristic(), a.nvars(), v, dr - db);
        r = lcb * r - lcr * shift * b;
    }
    return r;
}

GfPoly content_slot(const GfPoly& a, std::uint32_t v) {
    GfPoly c(a.characteristic(), a.nvars());
    std::uint32_t d = a.degree_in(v);
    for (std::uint32_t k = 0; k <= d; ++k) {
        GfPoly coef = a.coefficient_of(v, k);
        if (!coef.is_zero()) c = GfPoly::gcd(c, coef);
        if (c.is_one()) break;
    }
    return c;
}

}  // namespace

GfPoly GfPoly::gcd(const GfPoly& a, const GfPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return constant(a.p_, a.nvars_, 1);
    std::uint32_t v = std::uint32_t(std::max(a.max_used_slot(), b.max_used_slot()));
    GfPoly ca = content_slot(a, v), cb = content_slot(b, v);
    GfPoly c = gcd(ca, cb);
    GfPoly pa = *try_divide_exact(a, ca);
    GfPoly pb = *try_divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(v) > 0) {
        GfPoly r = prem_slot(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero())
            pb = std::move(r);
        else
            pb = *try_divide_exact(r, content_slot(r, v));
    }
    GfPoly g = pb.is_zero() ? c * (*try_divide_exact(pa, content_slot(pa, v))) : c;
    return g.monic();
}

bool GfPoly::exponents_divisible_by(std::uint32_t k) const {
    for (const auto& t : terms_)
        for (auto e : t.mono)
            if (e % k != 0) return false;
    return true;
}

GfPoly GfPoly::exponents_scaled(std::uint32_t k) const {
    GfPoly r = *this;
    for (auto& t : r.terms_)
        for (auto& e : t.mono) e *= k;
    // scaling exponents by k>0 preserves the descending term order
    return r;
}

GfPoly GfPoly::exponents_divided(std::uint32_t k) const {
    GfPoly r = *this;
    for (auto& t : r.terms_)
        for (auto& e : t.mono) {
            if (e % k != 0) fail(Errc::Internal, "exponent not divisible");
            e /= k;
        }
    return r;
}

GfPoly GfPoly::remapped(std::uint32_t new_nvars, std::span<const std::uint32_t> slot_map,
                        std::span<const std::uint32_t> exp_mult) const {
    GfPoly r(p_, new_nvars);
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(new_nvars, 0);
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            if (t.mono[k] == 0) continue;
            e[slot_map[k]] += t.mono[k] * exp_mult[k];
        }
        terms.push_back({std::move(e), t.coef});
    }
    return from_terms(p_, new_nvars, std::move(terms));
}

std::string GfPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool empty_mono = degree_total(t.mono) == 0;
        bool printed = false;
        if (t.coef != 1 || empty_mono) {
            os << t.coef;
            printed = true;
        }
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            if (t.mono[k] == 0) continue;
            if (printed) os << "*";
            os << names[k];
            if (t.mono[k] > 1) os << "^" << t.mono[k];
            printed = true;
        }
    }
    return os.str();
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::DuplicateGeneratorName: return "DuplicateGeneratorName";
        case Errc::ReservedName: return "ReservedName";
        case Errc::ElementOfK: return "ElementOfK";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ZeroSeparant: return "ZeroSeparant";
        case Errc::MultivariateInput: return "MultivariateInput";
        case Errc::OrderTooHigh: return "OrderTooHigh";
        case Errc::Reducible: return "Reducible";
        case Errc::IrreducibilityUnknown: return "IrreducibilityUnknown";
        case Errc::DivisionByZeroClass: return "DivisionByZeroClass";
        case Errc::MixedIdeals: return "MixedIdeals";
        case Errc::OrderNotLower: return "OrderNotLower";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::NotAConstantGenerator: return "NotAConstantGenerator";
        case Errc::DerivativeVariablePresent: return "DerivativeVariablePresent";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::Exhausted: return "Exhausted";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace sepdiff
