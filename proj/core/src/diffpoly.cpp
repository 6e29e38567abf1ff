#include "sepdiff/diffpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sepdiff/error.hpp"

namespace sepdiff {

int compare_dp_monomials(const DPMonomial& a, const DPMonomial& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    while (ia != a.rend() && ib != b.rend()) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.rend()) return 1;
    if (ib != b.rend()) return -1;
    return 0;
}

namespace {

void clean_monomial(DPMonomial& m) {
    std::sort(m.begin(), m.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    DPMonomial out;
    for (auto& [v, e] : m) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.push_back({v, e});
    }
    m = std::move(out);
}

DPMonomial mono_mul(const DPMonomial& a, const DPMonomial& b) {
    DPMonomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            r.push_back(a[i++]);
        else if (b[j].first < a[i].first)
            r.push_back(b[j++]);
        else {
            r.push_back({a[i].first, a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

std::optional<DPMonomial> mono_div(const DPMonomial& a, const DPMonomial& b) {
    DPMonomial r;
    std::size_t i = 0;
    for (const auto& [v, e] : b) {
        while (i < a.size() && a[i].first < v) r.push_back(a[i++]);
        if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
        if (a[i].second > e) r.push_back({v, a[i].second - e});
        ++i;
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    return r;
}

}  // namespace

void DiffPoly::normalize() {
    for (auto& t : terms_) clean_monomial(t.mono);
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return compare_dp_monomials(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coef.is_zero(); });
    terms_ = std::move(out);
}

DiffPoly DiffPoly::zero(const FieldPresentation& K, std::uint32_t arity) {
    DiffPoly r;
    r.K_ = K;
    r.arity_ = arity;
    return r;
}

DiffPoly DiffPoly::constant(const FieldPresentation& K, std::uint32_t arity,
                            RationalFunction value) {
    DiffPoly r = zero(K, arity);
    if (!value.is_zero()) r.terms_.push_back({{}, std::move(value)});
    return r;
}

DiffPoly DiffPoly::scalar(const FieldPresentation& K, std::uint32_t arity, fp_t value) {
    return constant(K, arity, RationalFunction::scalar(K, value));
}

DiffPoly DiffPoly::var(const FieldPresentation& K, std::uint32_t arity, DerivVar v,
                       std::uint32_t exp) {
    if (v.var >= arity) fail(Errc::ArityMismatch, "derivative variable outside the ring");
    if (exp == 0) return scalar(K, arity, 1);
    DiffPoly r = zero(K, arity);
    r.terms_.push_back({{{v, exp}}, RationalFunction::one(K)});
    return r;
}

DiffPoly DiffPoly::from_terms(const FieldPresentation& K, std::uint32_t arity,
                              std::vector<Term> terms) {
    DiffPoly r = zero(K, arity);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

bool DiffPoly::in_coefficient_field() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

RationalFunction DiffPoly::coefficient_value() const {
    if (terms_.empty()) return RationalFunction::zero(K_);
    if (!in_coefficient_field())
        fail(Errc::Internal, "coefficient_value on a nonconstant differential polynomial");
    return terms_[0].coef;
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
    if (!(a.K_ == b.K_) || a.arity_ != b.arity_ ||
        a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    if (!(a.K_ == b.K_) || a.arity_ != b.arity_)
        fail(Errc::Internal, "mixed rings in K{x} addition");
    DiffPoly r = DiffPoly::zero(a.K_, a.arity_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = compare_dp_monomials(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0)
            r.terms_.push_back(a.terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(b.terms_[j++]);
        else {
            RationalFunction s = a.terms_[i].coef + b.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a + (-b); }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    if (!(a.K_ == b.K_) || a.arity_ != b.arity_)
        fail(Errc::Internal, "mixed rings in K{x} multiplication");
    std::map<DPMonomial, RationalFunction,
             decltype([](const DPMonomial& x, const DPMonomial& y) {
                 return compare_dp_monomials(x, y) > 0;
             })>
        acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            DPMonomial m = mono_mul(ta.mono, tb.mono);
            RationalFunction c = ta.coef * tb.coef;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    DiffPoly r = DiffPoly::zero(a.K_, a.arity_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

DiffPoly DiffPoly::scaled(const RationalFunction& c) const {
    if (c.is_zero()) return zero(K_, arity_);
    DiffPoly r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

DiffPoly DiffPoly::mul_var(DerivVar v, std::uint32_t exp) const {
    if (exp == 0) return *this;
    DiffPoly r = *this;
    for (auto& t : r.terms_) t.mono = mono_mul(t.mono, {{v, exp}});
    r.normalize();
    return r;
}

DiffPoly DiffPoly::pow(std::uint32_t e) const {
    DiffPoly r = scalar(K_, arity_, 1);
    DiffPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

DiffPoly DiffPoly::coef_delta() const {
    DiffPoly r = zero(K_, arity_);
    for (const auto& t : terms_) {
        RationalFunction c = t.coef.derive();
        if (!c.is_zero()) r.terms_.push_back({t.mono, std::move(c)});
    }
    r.normalize();
    return r;
}

DiffPoly DiffPoly::delta() const {
    fp_t p = K_.characteristic();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        RationalFunction dc = t.coef.derive();
        if (!dc.is_zero()) out.push_back({t.mono, std::move(dc)});
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            auto [v, e] = t.mono[k];
            fp_t escalar = e % p;
            if (escalar == 0) continue;
            RationalFunction c = t.coef * RationalFunction::scalar(K_, escalar);
            DPMonomial m = t.mono;
            if (--m[k].second == 0) m.erase(m.begin() + std::ptrdiff_t(k));
            m = mono_mul(m, {{DerivVar{v.var, v.order + 1}, 1}});
            out.push_back({std::move(m), std::move(c)});
        }
    }
    return from_terms(K_, arity_, std::move(out));
}

DiffPoly DiffPoly::delta(std::uint32_t times) const {
    DiffPoly r = *this;
    for (std::uint32_t i = 0; i < times; ++i) r = r.delta();
    return r;
}

DiffPoly DiffPoly::partial(DerivVar v) const {
    fp_t p = K_.characteristic();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            if (t.mono[k].first != v) continue;
            fp_t escalar = t.mono[k].second % p;
            if (escalar == 0) break;
            RationalFunction c = t.coef * RationalFunction::scalar(K_, escalar);
            DPMonomial m = t.mono;
            if (--m[k].second == 0) m.erase(m.begin() + std::ptrdiff_t(k));
            out.push_back({std::move(m), std::move(c)});
            break;
        }
    }
    return from_terms(K_, arity_, std::move(out));
}

std::uint32_t DiffPoly::order() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "order of the zero polynomial");
    std::uint32_t o = 0;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono) o = std::max(o, v.order);
    return o;
}

DerivVar DiffPoly::leader() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "leader of the zero polynomial");
    if (in_coefficient_field())
        fail(Errc::ElementOfK, "leader undefined on elements of K");
    DerivVar best{0, 0};
    bool found = false;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono)
            if (!found || best < v) {
                best = v;
                found = true;
            }
    return best;
}

std::uint32_t DiffPoly::degree() const { return degree_in(leader()); }

Rank DiffPoly::rank() const {
    DerivVar l = leader();
    return Rank{order(), degree_in(l)};
}

DiffPoly DiffPoly::separant() const { return partial(leader()); }

DiffPoly DiffPoly::initial() const {
    DerivVar l = leader();
    return coefficient_of(l, degree_in(l));
}

std::uint32_t DiffPoly::degree_in(DerivVar v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        for (const auto& [w, e] : t.mono)
            if (w == v) d = std::max(d, e);
    return d;
}

DiffPoly DiffPoly::coefficient_of(DerivVar v, std::uint32_t k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = 0;
        for (const auto& [w, ex] : t.mono)
            if (w == v) e = ex;
        if (e != k) continue;
        Term nt = t;
        std::erase_if(nt.mono, [&](const auto& pr) { return pr.first == v; });
        out.push_back(std::move(nt));
    }
    return from_terms(K_, arity_, std::move(out));
}

std::uint64_t DiffPoly::total_var_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) {
        std::uint64_t s = 0;
        for (const auto& [v, e] : t.mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

std::vector<DerivVar> DiffPoly::used_vars() const {
    std::vector<DerivVar> vs;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

RationalFunction DiffPoly::evaluate(std::span<const RationalFunction> point) const {
    if (point.size() != arity_)
        fail(Errc::ArityMismatch, "evaluation point arity mismatch");
    std::vector<std::uint32_t> max_order(arity_, 0);
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono)
            max_order[v.var] = std::max(max_order[v.var], v.order);
    std::vector<std::vector<RationalFunction>> derivs(arity_);
    for (std::uint32_t i = 0; i < arity_; ++i) {
        derivs[i].push_back(point[i]);
        for (std::uint32_t j = 1; j <= max_order[i]; ++j)
            derivs[i].push_back(derivs[i].back().derive());
    }
    RationalFunction acc = RationalFunction::zero(K_);
    for (const auto& t : terms_) {
        RationalFunction v = t.coef;
        for (const auto& [w, e] : t.mono) v *= derivs[w.var][w.order].pow(e);
        acc += v;
    }
    return acc;
}

std::optional<DiffPoly> DiffPoly::try_divide_exact(const DiffPoly& a, const DiffPoly& b) {
    if (b.is_zero()) return std::nullopt;
    DiffPoly q = zero(a.K_, a.arity_);
    DiffPoly rem = a;
    const Term& lb = b.terms_[0];
    while (!rem.is_zero()) {
        const Term& lr = rem.terms_[0];
        auto m = mono_div(lr.mono, lb.mono);
        if (!m) return std::nullopt;
        RationalFunction c = lr.coef / lb.coef;
        DiffPoly step = zero(a.K_, a.arity_);
        step.terms_.push_back({*m, c});
        q += step;
        rem = rem - step * b;
    }
    return q;
}

std::string deriv_var_to_string(DerivVar v, std::span<const std::string> var_names) {
    const std::string& n = var_names[v.var];
    if (v.order == 0) return n;
    if (v.order == 1) return n + "'";
    if (v.order == 2) return n + "''";
    std::ostringstream os;
    os << "d(" << n << "," << v.order << ")";
    return os.str();
}

std::string DiffPoly::to_string(std::span<const std::string> var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (t.mono.empty()) {
            os << t.coef.to_string();
            printed = true;
        } else if (!t.coef.is_one()) {
            bool simple = t.coef.is_poly() && t.coef.num().terms().size() == 1;
            if (simple)
                os << t.coef.to_string();
            else
                os << "(" << t.coef.to_string() << ")";
            printed = true;
        }
        for (auto it = t.mono.rbegin(); it != t.mono.rend(); ++it) {
            if (printed) os << "*";
            os << deriv_var_to_string(it->first, var_names);
            if (it->second > 1) os << "^" << it->second;
            printed = true;
        }
    }
    return os.str();
}

// --- witness enumeration ------------------------------------------------

namespace {

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 60) / base) return std::uint64_t(1) << 60;
        r *= base;
    }
    return r;
}

// t-polynomial of degree d: coefficient tuple (a_d,...,a_0) decoded from the
// counter with a_d in [1,p) most significant.
GfPoly tpoly_at(const FieldPresentation& K, std::uint64_t d, std::uint64_t u) {
    fp_t p = K.characteristic();
    std::uint32_t nv = K.num_vars();
    std::uint32_t ts = *K.t_slot();
    std::vector<GfPoly::Term> terms;
    std::uint64_t pd = sat_pow(p, d);
    fp_t lead = fp_t(1 + u / pd);
    std::uint64_t v = u % pd;
    Exponents e(nv, 0);
    e[ts] = std::uint32_t(d);
    terms.push_back({e, lead});
    for (std::uint64_t i = d; i-- > 0;) {
        std::uint64_t pi = sat_pow(p, i);
        fp_t digit = fp_t((v / pi) % p);
        if (digit != 0) {
            Exponents ei(nv, 0);
            ei[ts] = std::uint32_t(i);
            terms.push_back({ei, digit});
        }
    }
    return GfPoly::from_terms(p, nv, std::move(terms));
}

std::vector<Exponents> compositions(std::uint32_t total, std::uint32_t parts) {
    std::vector<Exponents> out;
    Exponents cur(parts, 0);
    auto rec = [&](auto&& self, std::uint32_t idx, std::uint32_t left) -> void {
        if (idx + 1 == parts) {
            cur[idx] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    if (parts == 0) return out;
    rec(rec, 0, total);
    return out;
}

}  // namespace

WitnessEnumerator::WitnessEnumerator(FieldPresentation K) : K_(std::move(K)) {}

void WitnessEnumerator::refill() {
    fp_t p = K_.characteristic();
    bool has_t = K_.has_diff_gen();
    std::uint32_t m = K_.num_constant_gens();
    std::uint32_t nv = K_.num_vars();

    if (!scalars_done_) {
        for (fp_t s = p; s-- > 0;)
            pending_.push_back(RationalFunction::scalar(K_, s));
        scalars_done_ = true;
        return;
    }
    if (!has_t && m == 0) {
        exhausted_ = true;
        return;
    }
    ++round_;
    std::uint64_t r = round_;
    std::vector<RationalFunction> chunk;
    if (has_t) {
        std::uint64_t cap = (p - 1) * sat_pow(p, r);
        cap = std::min<std::uint64_t>(cap, 1 << 22);
        for (std::uint64_t u = 0; u < cap; ++u)
            chunk.push_back(RationalFunction::from_poly(K_, tpoly_at(K_, r, u)));
    }
    if (m >= 1) {
        for (std::uint64_t dmu = 1; dmu <= r; ++dmu) {
            std::uint64_t dt = r - dmu;
            if (dt > 0 && !has_t) continue;
            for (const auto& comp : compositions(std::uint32_t(dmu), m)) {
                Exponents mono(nv, 0);
                for (std::uint32_t i = 0; i < m; ++i) mono[i] = comp[i];
                if (dt == 0) {
                    for (fp_t s = 1; s < p; ++s) {
                        GfPoly g = GfPoly::from_terms(p, nv, {{mono, s}});
                        chunk.push_back(RationalFunction::from_poly(K_, std::move(g)));
                    }
                } else {
                    std::uint64_t cap = (p - 1) * sat_pow(p, dt);
                    cap = std::min<std::uint64_t>(cap, 1 << 18);
                    for (std::uint64_t u = 0; u < cap; ++u) {
                        GfPoly g = tpoly_at(K_, dt, u).mul_monomial(mono, 1);
                        chunk.push_back(RationalFunction::from_poly(K_, std::move(g)));
                    }
                }
            }
        }
    }
    for (auto it = chunk.rbegin(); it != chunk.rend(); ++it)
        pending_.push_back(std::move(*it));
}

std::optional<RationalFunction> WitnessEnumerator::next() {
    while (pending_.empty()) {
        if (exhausted_) return std::nullopt;
        refill();
    }
    RationalFunction r = std::move(pending_.back());
    pending_.pop_back();
    return r;
}

std::optional<RationalFunction> nonvanishing_witness(const DiffPoly& g,
                                                     std::uint64_t budget) {
    if (g.is_zero()) fail(Errc::ZeroInput, "nonvanishing witness of the zero polynomial");
    if (g.arity() != 1)
        fail(Errc::MultivariateInput, "witness search is restricted to one variable");
    WitnessEnumerator en(g.field());
    std::vector<RationalFunction> point(1, RationalFunction::zero(g.field()));
    for (std::uint64_t i = 0; i < budget; ++i) {
        auto a = en.next();
        if (!a) return std::nullopt;
        point[0] = *a;
        if (!g.evaluate(point).is_zero()) return *a;
    }
    return std::nullopt;
}

}  // namespace sepdiff
