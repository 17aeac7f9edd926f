#include "momgra/laurent.hpp"

#include <cstdlib>

namespace momgra {

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.c_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.c_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int e0) const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[e + e0] = c;
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (auto& [e, c] : c_)
        if (e != 0) r.set_coeff(e - 1, static_cast<std::int64_t>(e) * c);
    return r;
}

std::int64_t LaurentPoly::eval_one() const {
    std::int64_t s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

bool LaurentPoly::in_v_times_Z_of_v() const {
    return is_zero() || min_exp() >= 1;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            s += std::to_string(a);
        } else {
            if (a != 1) s += std::to_string(a) + "*";
            s += "v";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly r;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (s == "0" || s.empty()) return r;
    while (i < s.size()) {
        skip_ws();
        std::int64_t sign = 1;
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        skip_ws();
        std::int64_t coeff = 1;
        bool have_coeff = false;
        if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coeff = std::strtoll(s.substr(i, j - i).c_str(), nullptr, 10);
            i = j;
            have_coeff = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        int exp = 0;
        if (i < s.size() && s[i] == 'v') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                if (j < s.size() && s[j] == '-') ++j;
                while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
                exp = static_cast<int>(std::strtoll(s.substr(i, j - i).c_str(), nullptr, 10));
                i = j;
            }
        } else {
            require(have_coeff, "bad Laurent polynomial: " + s);
        }
        r.set_coeff(exp, r.coeff(exp) + sign * coeff);
        skip_ws();
    }
    return r;
}

}  // namespace momgra
