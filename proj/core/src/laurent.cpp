#include "qcharrel/laurent.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcr {

LaurentPoly LaurentPoly::constant(Int c) {
    LaurentPoly p;
    p.accumulate(XWeight{}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(XWeight w, Int c) {
    LaurentPoly p;
    p.accumulate(w, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int var, Rational exp, Int c) {
    return monomial(x_var_pow(var, exp), c);
}

Int LaurentPoly::coeff(const XWeight& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Int(0) : it->second;
}

void LaurentPoly::accumulate(const XWeight& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [w, c] : o.t_) accumulate(w, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [w, c] : o.t_) accumulate(w, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) r.accumulate(x_mul(wa, wb), ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : t_) {
        Int a = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1 || w.is_trivial()) {
            out += a.str();
            if (!w.is_trivial()) out += " ";
        }
        if (!w.is_trivial()) out += w.str();
    }
    return out;
}

LaurentPoly lp_binomial(int sign, const XWeight& w) {
    LaurentPoly p = LaurentPoly::constant(Int(1));
    p.accumulate(w, Int(sign));
    return p;
}

LaurentPoly lp_mono_diff(const XWeight& a, const XWeight& b) {
    LaurentPoly p = LaurentPoly::monomial(a);
    p.accumulate(b, Int(-1));
    return p;
}

namespace {

XWeight erase_var(const XWeight& w, int var) {
    XWeight r;
    for (const auto& pe : w.e)
        if (pe.first != var) r.e.push_back(pe);
    return r;
}

}  // namespace

LaurentPoly lp_set_zero(const LaurentPoly& p, int var) {
    LaurentPoly r;
    for (const auto& [w, c] : p.terms()) {
        Rational e = w.exponent(var);
        if (e.num < 0)
            throw std::domain_error("lp_set_zero: negative exponent of x" +
                                    std::to_string(var));
        if (e.num == 0) r.accumulate(w, c);
    }
    return r;
}

LaurentPoly lp_set_one(const LaurentPoly& p, int var) {
    LaurentPoly r;
    for (const auto& [w, c] : p.terms()) r.accumulate(erase_var(w, var), c);
    return r;
}

LaurentPoly lp_top_coeff(const LaurentPoly& p, int var) {
    if (p.is_zero()) return p;
    Rational top = p.terms().begin()->first.exponent(var);
    for (const auto& [w, c] : p.terms()) {
        Rational e = w.exponent(var);
        if (top < e) top = e;
    }
    LaurentPoly r;
    for (const auto& [w, c] : p.terms())
        if (w.exponent(var) == top) r.accumulate(erase_var(w, var), c);
    return r;
}

LaurentPoly lp_coeff_of(const LaurentPoly& p, int var, const Rational& k) {
    LaurentPoly r;
    for (const auto& [w, c] : p.terms())
        if (w.exponent(var) == k) r.accumulate(erase_var(w, var), c);
    return r;
}

RationalFn RationalFn::of(LaurentPoly p) {
    RationalFn f;
    f.num = std::move(p);
    return f;
}

RationalFn RationalFn::ratio(LaurentPoly n, LaurentPoly d) {
    if (d.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    RationalFn f;
    f.num = std::move(n);
    f.den = std::move(d);
    return f;
}

RationalFn RationalFn::reciprocal() const {
    return ratio(den, num);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn::ratio(a.num * b.num, a.den * b.den);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    return RationalFn::ratio(a.num * b.den, a.den * b.num);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn::ratio(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn::ratio(a.num * b.den - b.num * a.den, a.den * b.den);
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % prime);
}

std::uint64_t pow_signed(std::uint64_t base, long long exp) {
    // Exponents act modulo p-1 on the nonzero residues we sample.
    const long long m = static_cast<long long>(prime - 1);
    long long e = exp % m;
    if (e < 0) e += m;
    std::uint64_t r = 1, b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

std::uint64_t Sampler::nonzero() {
    const std::uint64_t m = prime - 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / m * m;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return 1 + r % m;
}

long long fold_exponent_lcm(const LaurentPoly& p, long long L) {
    for (const auto& [w, c] : p.terms())
        for (const auto& [v, e] : w.e) L = lcm_ll(L, e.den);
    return L;
}

std::uint64_t eval(const LaurentPoly& p, const std::map<int, std::uint64_t>& point,
                   long long L) {
    std::uint64_t acc = 0;
    for (const auto& [w, c] : p.terms()) {
        Int cm = c % Int(prime);
        if (cm < 0) cm += Int(prime);
        std::uint64_t term = cm.convert_to<std::uint64_t>();
        for (const auto& [v, e] : w.e) {
            long long exp = e.num * (L / e.den);
            term = mul(term, pow_signed(point.at(v), exp));
        }
        acc = (acc + term) % prime;
    }
    return acc;
}

}  // namespace modp

namespace {

void collect_vars(const LaurentPoly& p, std::set<int>& vars) {
    for (const auto& [w, c] : p.terms())
        for (const auto& [v, e] : w.e) vars.insert(v);
}

}  // namespace

PitOutcome pit_equal(const RationalFn& lhs, const RationalFn& rhs, const PitMode& mode) {
    PitOutcome out;
    if (mode.exact) {
        LaurentPoly diff = lhs.num * rhs.den - rhs.num * lhs.den;
        if (!diff.is_zero()) {
            out.equal = false;
            const auto& [w, c] = *diff.terms().begin();
            out.witness = c.str() + " * " + w.str();
        }
        return out;
    }

    std::set<int> vars;
    long long L = 1;
    for (const LaurentPoly* p :
         {&lhs.num, &lhs.den, &rhs.num, &rhs.den}) {
        collect_vars(*p, vars);
        L = modp::fold_exponent_lcm(*p, L);
    }

    modp::Sampler rng(mode.seed);
    for (int trial = 0; trial < mode.trials; ++trial) {
        std::map<int, std::uint64_t> s;
        std::uint64_t ld = 0, rd = 0;
        bool ok = false;
        for (int attempt = 0; attempt < 64; ++attempt) {
            s.clear();
            for (int v : vars) s[v] = rng.nonzero();
            ld = modp::eval(lhs.den, s, L);
            rd = modp::eval(rhs.den, s, L);
            if (ld != 0 && rd != 0) {
                ok = true;
                break;
            }
        }
        if (!ok)
            throw std::runtime_error(
                "pit_equal: resampling budget exhausted, a denominator vanishes on "
                "every sampled point");
        std::uint64_t ln = modp::eval(lhs.num, s, L);
        std::uint64_t rn = modp::eval(rhs.num, s, L);
        if (modp::mul(ln, rd) != modp::mul(rn, ld)) {
            out.equal = false;
            std::ostringstream w;
            w << "trial " << trial << ":";
            for (const auto& [v, sv] : s) w << " s" << v << "=" << sv;
            if (L > 1) w << " (x_i = s_i^" << L << ")";
            out.witness = w.str();
            return out;
        }
    }
    return out;
}

}  // namespace qcr
