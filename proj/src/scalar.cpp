#include "momgra/scalar.hpp"

namespace momgra {

Field Field::prime(long p) {
    require(p >= 3, "field modulus must be an odd prime >= 3");
    require(p % 2 != 0, "characteristic 2 is not supported");
    for (long d = 3; d * d <= p; d += 2)
        require(p % d != 0, "field modulus must be prime: " + std::to_string(p));
    return Field{Tag::Fp, p};
}

Num Field::reduce(const Num& a) const {
    if (tag == Tag::Q) return a;
    // Residues are stored as integers in [0, p).
    mpz_class num = a.get_num(), den = a.get_den();
    mpz_class pm(p);
    mpz_class r = num % pm;
    if (r < 0) r += pm;
    if (den != 1) {
        mpz_class d = den % pm, dinv;
        if (d < 0) d += pm;
        require(mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pm.get_mpz_t()) != 0,
                "denominator not invertible mod p");
        r = (r * dinv) % pm;
    }
    return Num(r);
}

Num Field::inv(const Num& a) const {
    if (tag == Tag::Q) {
        require(sgn(a) != 0, "division by zero");
        return 1 / a;
    }
    Num r = reduce(a);
    require(sgn(r) != 0, "division by zero in F_p");
    mpz_class pm(p), ainv;
    mpz_class num = r.get_num();
    require(mpz_invert(ainv.get_mpz_t(), num.get_mpz_t(), pm.get_mpz_t()) != 0,
            "element not invertible mod p");
    return Num(ainv);
}

std::string num_str(const Num& a) {
    return a.get_str();
}

}  // namespace momgra
