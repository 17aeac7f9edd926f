#ifndef MOMGRA_POLY_HPP
#define MOMGRA_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "momgra/scalar.hpp"

namespace momgra {

// Exponent vector, one slot per variable.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Sparse multivariate polynomial over a Field. The number of variables is
// fixed per instance; terms are kept in lex order on exponent vectors and no
// zero coefficient is ever stored.  Lattice generators sit in degree 2, so a
// monomial of exponent-degree d has graded degree 2d.
class Poly {
public:
    Poly() : nv_(0) {}
    explicit Poly(int nvars) : nv_(nvars) {}
    static Poly constant(int nvars, const Num& c, const Field& F);
    static Poly variable(int nvars, int i);
    // Linear form from integer coordinates (length nvars), reduced into F.
    static Poly linear(const std::vector<long>& coords, const Field& F);

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Mono, Num>& terms() const { return t_; }
    Num coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Num(0) : it->second;
    }
    void set_coeff(const Mono& m, const Num& c, const Field& F);

    // Graded degree (2 * exponent degree) of the top term; -1 for zero.
    int degree() const;
    int min_degree() const;  // graded degree of the bottom term; -1 for zero
    bool is_homogeneous() const;

    Poly add(const Poly& o, const Field& F) const;
    Poly sub(const Poly& o, const Field& F) const;
    Poly mul(const Poly& o, const Field& F) const;
    Poly scale(const Num& c, const Field& F) const;
    Poly neg(const Field& F) const;
    bool eq(const Poly& o) const { return nv_ == o.nv_ && t_ == o.t_; }

    // Substitute variable i by the polynomial g (used to pass to S/(l)).
    Poly substitute(int i, const Poly& g, const Field& F) const;
    // Exact division; throws DivisionError when the division is not exact.
    Poly divide_exact(const Poly& d, const Field& F) const;
    bool divisible_by(const Poly& d, const Field& F) const;

    // Drop the last variable after setting it to zero (S-hat -> S, delta -> 0).
    Poly kill_last_var(const Field& F) const;
    // Re-embed into a ring with one extra trailing variable.
    Poly extend_one_var() const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    int nv_;
    std::map<Mono, Num> t_;
};

// Monomials of exponent-degree d in the variables listed in `vars` (indices
// into an nvars-slot exponent vector), in lex order. Used for degreewise
// coordinate bases, including edge rings where one pivot variable is gone.
std::vector<Mono> monomials_of_degree(int nvars, const std::vector<int>& vars, int d);

}  // namespace momgra

#endif
