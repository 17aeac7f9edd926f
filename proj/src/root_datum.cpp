#include "momgra/root_datum.hpp"

#include <algorithm>
#include <map>

namespace momgra {

bool AffineWeight::is_zero() const {
    if (delta != 0) return false;
    for (long c : x)
        if (c != 0) return false;
    return true;
}

AffineWeight AffineWeight::operator-() const {
    AffineWeight r = *this;
    for (long& c : r.x) c = -c;
    r.delta = -r.delta;
    return r;
}

AffineWeight AffineWeight::operator+(const AffineWeight& o) const {
    AffineWeight r = *this;
    for (size_t i = 0; i < r.x.size(); ++i) r.x[i] += o.x[i];
    r.delta += o.delta;
    return r;
}

AffineWeight AffineWeight::operator-(const AffineWeight& o) const {
    return *this + (-o);
}

Vec AffineWeight::coords() const {
    Vec v = x;
    v.push_back(delta);
    return v;
}

namespace {

struct TypeInfo {
    char series;
    int rank;
};

TypeInfo parse_label(const std::string& label0) {
    std::string label = label0;
    if (!label.empty() && label.back() == '~') label.pop_back();
    require(label.size() >= 2, "unknown root system label: " + label0);
    char series = label[0];
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw Error("unknown root system label: " + label0);
    }
    bool ok = false;
    switch (series) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: ok = false;
    }
    require(ok, "unknown root system label: " + label0);
    return {series, rank};
}

// cartan[i][j] = <alpha_i, alpha_j^vee>
std::vector<std::vector<long>> cartan_matrix(char series, int n) {
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (series) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':  // alpha_{n-1} long chain, alpha_n short
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki numbering: node 2 hangs off node 4.
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(1, 3);
            for (int i = 4; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            a[0][1] = -1;
            a[1][0] = -3;
            break;
        default:
            throw Error("unhandled series");
    }
    return a;
}

}  // namespace

RootDatum RootDatum::build(const std::string& label) {
    TypeInfo t = parse_label(label);
    RootDatum rd;
    rd.label_ = std::string(1, t.series) + std::to_string(t.rank);
    rd.rank_ = t.rank;
    rd.cartan_ = cartan_matrix(t.series, t.rank);
    const int n = t.rank;

    // Seed with the simple roots and close up under simple reflections.
    std::map<Vec, size_t> seen;  // by simple-root coordinates
    std::vector<Root> roots;
    for (int i = 0; i < n; ++i) {
        Root r;
        r.x = Vec(rd.cartan_[i].begin(), rd.cartan_[i].end());
        r.coroot = Vec(n, 0);
        r.coroot[i] = 1;
        r.simple = Vec(n, 0);
        r.simple[i] = 1;
        r.height = 1;
        seen[r.simple] = roots.size();
        roots.push_back(r);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < roots.size(); ++k) {
            Root r = roots[k];
            for (int i = 0; i < n; ++i) {
                long c = r.x[i];  // <beta, alpha_i^vee>
                Root img;
                img.x = r.x;
                for (int j = 0; j < n; ++j) img.x[j] -= c * rd.cartan_[i][j];
                long cc = 0;  // <alpha_i, beta^vee>
                for (int j = 0; j < n; ++j) cc += rd.cartan_[i][j] * r.coroot[j];
                img.coroot = r.coroot;
                img.coroot[i] -= cc;
                img.simple = r.simple;
                img.simple[i] -= c;
                bool positive = true;
                for (long s : img.simple)
                    if (s < 0) positive = false;
                if (!positive) continue;
                img.height = 0;
                for (long s : img.simple) img.height += static_cast<int>(s);
                if (seen.emplace(img.simple, roots.size()).second) {
                    roots.push_back(img);
                    changed = true;
                }
            }
        }
    }
    // height order; within a height, alpha_1 before alpha_2 etc.
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.height != b.height ? a.height < b.height : a.simple > b.simple;
    });
    rd.pos_ = std::move(roots);
    rd.highest_ = rd.num_positive() - 1;
    for (int i = 0; i < rd.num_positive(); ++i)
        require(rd.pos_[i].height <= rd.pos_[rd.highest_].height, "highest root not unique");
    rd.h_ = rd.pos_[rd.highest_].height + 1;
    return rd;
}

int RootDatum::find_root(const Vec& x_coords) const {
    for (int i = 0; i < num_positive(); ++i)
        if (pos_[i].x == x_coords) return i;
    return -1;
}

long RootDatum::pairing(const Vec& x_coords, const Vec& covector) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += x_coords[i] * covector[i];
    return s;
}

Vec RootDatum::reflect_weight(int root_index, const Vec& lambda) const {
    const Root& b = pos_[root_index];
    long c = pairing(lambda, b.coroot);
    Vec r = lambda;
    for (int i = 0; i < rank_; ++i) r[i] -= c * b.x[i];
    return r;
}

Vec RootDatum::reflect_covector(int root_index, const Vec& v) const {
    const Root& b = pos_[root_index];
    long c = pairing(b.x, v);
    Vec r = v;
    for (int i = 0; i < rank_; ++i) r[i] -= c * b.coroot[i];
    return r;
}

AffineWeight RootDatum::affine_root_value(const AffineRoot& ar) const {
    require(ar.root != 0, "zero affine root");
    int idx = std::abs(ar.root) - 1;
    int sign = ar.root > 0 ? 1 : -1;
    AffineWeight w;
    w.x = pos_[idx].x;
    for (long& c : w.x) c *= sign;
    w.delta = ar.delta;
    return w;
}

AffineWeight RootDatum::root_weight(int root_index) const {
    AffineWeight w;
    w.x = pos_[root_index].x;
    w.delta = 0;
    return w;
}

AffineWeight RootDatum::delta_weight() const {
    AffineWeight w;
    w.x = Vec(rank_, 0);
    w.delta = 1;
    return w;
}

bool RootDatum::is_positive_affine(const AffineRoot& ar) const {
    require(ar.root != 0, "zero affine root");
    if (ar.delta != 0) return ar.delta > 0;
    return ar.root > 0;
}

AffineRoot RootDatum::normalize_label(const AffineRoot& ar) const {
    require(ar.root != 0, "cannot normalize the zero label");
    return is_positive_affine(ar) ? ar : ar.negated();
}

long RootDatum::affine_height(const AffineRoot& ar) const {
    require(is_positive_affine(ar), "height is defined for positive affine roots");
    int idx = std::abs(ar.root) - 1;
    int sign = ar.root > 0 ? 1 : -1;
    return sign * pos_[idx].height + ar.delta * h_;
}

std::string RootDatum::affine_root_str(const AffineRoot& ar) const {
    int idx = std::abs(ar.root) - 1;
    int sign = ar.root > 0 ? 1 : -1;
    const Vec& s = pos_[idx].simple;
    std::string out;
    for (int i = 0; i < rank_; ++i) {
        long c = sign * s[i];
        if (c == 0) continue;
        if (!out.empty() && c > 0) out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c) + "*";
        out += "a" + std::to_string(i + 1);
    }
    if (ar.delta != 0) {
        if (ar.delta > 0 && !out.empty()) out += "+";
        if (ar.delta == -1)
            out += "-";
        else if (ar.delta != 1)
            out += std::to_string(ar.delta) + "*";
        out += "d";
    }
    return out.empty() ? "0" : out;
}

}  // namespace momgra
