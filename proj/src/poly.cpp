#include "momgra/poly.hpp"

#include <algorithm>

namespace momgra {

Poly Poly::constant(int nvars, const Num& c, const Field& F) {
    Poly p(nvars);
    Num r = F.reduce(c);
    if (!F.is_zero(r)) p.t_[Mono(nvars, 0)] = r;
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.t_[m] = Num(1);
    return p;
}

Poly Poly::linear(const std::vector<long>& coords, const Field& F) {
    Poly p(static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) {
        Num c = F.from_long(coords[i]);
        if (!F.is_zero(c)) {
            Mono m(coords.size(), 0);
            m[i] = 1;
            p.t_[m] = c;
        }
    }
    return p;
}

void Poly::set_coeff(const Mono& m, const Num& c, const Field& F) {
    Num r = F.reduce(c);
    if (F.is_zero(r))
        t_.erase(m);
    else
        t_[m] = r;
}

int Poly::degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
    return d < 0 ? -1 : 2 * d;
}

int Poly::min_degree() const {
    if (t_.empty()) return -1;
    int d = mono_degree(t_.begin()->first);
    for (auto& [m, c] : t_) d = std::min(d, mono_degree(m));
    return 2 * d;
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    int d = mono_degree(t_.begin()->first);
    for (auto& [m, c] : t_)
        if (mono_degree(m) != d) return false;
    return true;
}

Poly Poly::add(const Poly& o, const Field& F) const {
    require(nv_ == o.nv_, "poly nvars mismatch");
    Poly r = *this;
    for (auto& [m, c] : o.t_) r.set_coeff(m, F.add(r.coeff(m), c), F);
    return r;
}

Poly Poly::sub(const Poly& o, const Field& F) const {
    require(nv_ == o.nv_, "poly nvars mismatch");
    Poly r = *this;
    for (auto& [m, c] : o.t_) r.set_coeff(m, F.sub(r.coeff(m), c), F);
    return r;
}

Poly Poly::mul(const Poly& o, const Field& F) const {
    require(nv_ == o.nv_, "poly nvars mismatch");
    Poly r(nv_);
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) {
            Mono m(nv_);
            for (int i = 0; i < nv_; ++i) m[i] = m1[i] + m2[i];
            r.set_coeff(m, F.add(r.coeff(m), F.mul(c1, c2)), F);
        }
    return r;
}

Poly Poly::scale(const Num& c, const Field& F) const {
    Poly r(nv_);
    Num rc = F.reduce(c);
    if (F.is_zero(rc)) return r;
    for (auto& [m, a] : t_) r.t_[m] = F.mul(a, rc);
    return r;
}

Poly Poly::neg(const Field& F) const {
    Poly r(nv_);
    for (auto& [m, a] : t_) r.t_[m] = F.neg(a);
    return r;
}

Poly Poly::substitute(int i, const Poly& g, const Field& F) const {
    require(g.nvars() == nv_, "substitute nvars mismatch");
    Poly r(nv_);
    for (auto& [m, c] : t_) {
        Poly term = Poly::constant(nv_, c, F);
        Mono rest = m;
        int e = rest[i];
        rest[i] = 0;
        Poly mono(nv_);
        mono.t_[rest] = Num(1);
        term = term.mul(mono, F);
        for (int k = 0; k < e; ++k) term = term.mul(g, F);
        r = r.add(term, F);
    }
    return r;
}

// Long division by the leading term of d (lex order); the remainder must
// vanish.
Poly Poly::divide_exact(const Poly& d, const Field& F) const {
    require(!d.is_zero(), "division by zero polynomial");
    Poly rem = *this, q(nv_);
    const auto& lead = *d.t_.rbegin();
    while (!rem.is_zero()) {
        auto it = rem.t_.rbegin();
        const Mono& m = it->first;
        Mono diff(nv_);
        bool ok = true;
        for (int i = 0; i < nv_; ++i) {
            diff[i] = m[i] - lead.first[i];
            if (diff[i] < 0) ok = false;
        }
        if (!ok) throw DivisionError("polynomial division is not exact");
        Num c = F.div(it->second, lead.second);
        Poly t(nv_);
        t.t_[diff] = c;
        q = q.add(t, F);
        rem = rem.sub(t.mul(d, F), F);
    }
    return q;
}

bool Poly::divisible_by(const Poly& d, const Field& F) const {
    try {
        divide_exact(d, F);
        return true;
    } catch (const DivisionError&) {
        return false;
    }
}

Poly Poly::kill_last_var(const Field& F) const {
    require(nv_ >= 1, "no variable to kill");
    Poly r(nv_ - 1);
    for (auto& [m, c] : t_) {
        if (m[nv_ - 1] != 0) continue;
        Mono mm(m.begin(), m.end() - 1);
        r.set_coeff(mm, F.add(r.coeff(mm), c), F);
    }
    return r;
}

Poly Poly::extend_one_var() const {
    Poly r(nv_ + 1);
    for (auto& [m, c] : t_) {
        Mono mm = m;
        mm.push_back(0);
        r.t_[mm] = c;
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Mono& m = it->first;
        Num c = it->second;
        std::string cs = num_str(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        s += first ? (negative ? "-" : "") : (negative ? "-" : "+");
        first = false;
        std::string vars;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_names[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += vars;
        }
    }
    return s;
}

static void monomials_rec(int nvars, const std::vector<int>& vars, size_t pos, int rest,
                          Mono& cur, std::vector<Mono>& out) {
    if (pos + 1 == vars.size()) {
        cur[vars[pos]] = rest;
        out.push_back(cur);
        cur[vars[pos]] = 0;
        return;
    }
    for (int e = rest; e >= 0; --e) {
        cur[vars[pos]] = e;
        monomials_rec(nvars, vars, pos + 1, rest - e, cur, out);
        cur[vars[pos]] = 0;
    }
}

std::vector<Mono> monomials_of_degree(int nvars, const std::vector<int>& vars, int d) {
    std::vector<Mono> out;
    if (d < 0) return out;
    if (vars.empty()) {
        if (d == 0) out.push_back(Mono(nvars, 0));
        return out;
    }
    Mono cur(nvars, 0);
    monomials_rec(nvars, vars, 0, d, cur, out);
    return out;
}

}  // namespace momgra
