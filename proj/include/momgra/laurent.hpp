#ifndef MOMGRA_LAURENT_HPP
#define MOMGRA_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "momgra/common.hpp"

namespace momgra {

// Sparse integer Laurent polynomial in the variable v. No zero coefficients
// are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::int64_t c) {
        if (c != 0) c_[0] = c;
    }
    static LaurentPoly v_power(int e, std::int64_t c = 1) {
        LaurentPoly p;
        if (c != 0) p.c_[e] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::int64_t coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0 : it->second;
    }
    void set_coeff(int e, std::int64_t c) {
        if (c == 0)
            c_.erase(e);
        else
            c_[e] = c;
    }
    const std::map<int, std::int64_t>& terms() const { return c_; }

    int min_exp() const { require(!is_zero(), "min_exp of zero"); return c_.begin()->first; }
    int max_exp() const { require(!is_zero(), "max_exp of zero"); return c_.rbegin()->first; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    // v -> v^{-1}
    LaurentPoly bar() const;
    LaurentPoly shifted(int e) const;  // multiply by v^e
    LaurentPoly derivative() const;    // d/dv, exponents may go negative
    std::int64_t eval_one() const;     // value at v = 1

    bool in_v_times_Z_of_v() const;    // lies in vZ[v]

    std::string str() const;           // e.g. "v^3", "v^-2-1", "1"
    static LaurentPoly parse(const std::string& s);

private:
    std::map<int, std::int64_t> c_;
};

}  // namespace momgra

#endif
