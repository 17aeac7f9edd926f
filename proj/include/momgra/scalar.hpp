#ifndef MOMGRA_SCALAR_HPP
#define MOMGRA_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "momgra/common.hpp"

namespace momgra {

// Exact scalars. All arithmetic goes through a Field context so the same
// polynomial and matrix code runs over Q and over F_p (p an odd prime).
using Num = mpq_class;

struct Field {
    enum class Tag { Q, Fp };

    Tag tag = Tag::Q;
    long p = 0;  // modulus when tag == Fp

    static Field rationals() { return Field{Tag::Q, 0}; }
    static Field prime(long p);

    bool is_rational() const { return tag == Tag::Q; }
    long characteristic() const { return is_rational() ? 0 : p; }

    Num reduce(const Num& a) const;
    Num from_long(long a) const { return reduce(Num(a)); }
    Num from_mpz(const mpz_class& a) const { return reduce(Num(a)); }

    Num add(const Num& a, const Num& b) const { return reduce(a + b); }
    Num sub(const Num& a, const Num& b) const { return reduce(a - b); }
    Num mul(const Num& a, const Num& b) const { return reduce(a * b); }
    Num neg(const Num& a) const { return reduce(-a); }
    Num inv(const Num& a) const;
    Num div(const Num& a, const Num& b) const { return mul(a, inv(b)); }

    bool is_zero(const Num& a) const { return sgn(a) == 0; }
    bool eq(const Num& a, const Num& b) const { return is_zero(sub(a, b)); }

    std::string str() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }
    bool operator==(const Field& o) const { return tag == o.tag && p == o.p; }
};

std::string num_str(const Num& a);

}  // namespace momgra

#endif
