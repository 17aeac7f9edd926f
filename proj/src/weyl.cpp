#include "momgra/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "momgra/scalar.hpp"

namespace momgra {

Weyl::Weyl(const RootDatum& rd) : rd_(rd) {
    const int r = rd_.rank();
    for (int k = 0; k < rd_.num_positive(); ++k) {
        std::vector<Vec> m(r, Vec(r, 0));
        for (int j = 0; j < r; ++j) {
            Vec ej(r, 0);
            ej[j] = 1;
            Vec img = rd_.reflect_covector(k, ej);
            for (int i = 0; i < r; ++i) m[i][j] = img[i];
        }
        refl_mats_.push_back(std::move(m));
    }
}

std::vector<Vec> Weyl::mat_mul(const std::vector<Vec>& a, const std::vector<Vec>& b) const {
    const int r = rd_.rank();
    std::vector<Vec> c(r, Vec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::vector<Vec> Weyl::mat_inv(const std::vector<Vec>& a) const {
    const int r = rd_.rank();
    Field F = Field::rationals();
    std::vector<std::vector<Num>> m(r, std::vector<Num>(2 * r, Num(0)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = Num(a[i][j]);
        m[i][r + i] = Num(1);
    }
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int i = col; i < r; ++i)
            if (sgn(m[i][col]) != 0) { piv = i; break; }
        require(piv >= 0, "singular Weyl matrix");
        std::swap(m[col], m[piv]);
        Num inv = F.inv(m[col][col]);
        for (int j = 0; j < 2 * r; ++j) m[col][j] *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == col || sgn(m[i][col]) == 0) continue;
            Num f = m[i][col];
            for (int j = 0; j < 2 * r; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Vec> out(r, Vec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            require(m[i][r + j].get_den() == 1, "non-integer Weyl inverse");
            out[i][j] = m[i][r + j].get_num().get_si();
        }
    return out;
}

Vec Weyl::mat_apply(const std::vector<Vec>& a, const Vec& v) const {
    const int r = rd_.rank();
    Vec out(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[i] += a[i][j] * v[j];
    return out;
}

Elem Weyl::identity() const {
    const int r = rd_.rank();
    Elem e;
    e.m.assign(r, Vec(r, 0));
    for (int i = 0; i < r; ++i) e.m[i][i] = 1;
    e.t.assign(r, 0);
    return e;
}

Elem Weyl::reflection(int root_index, long n) const {
    Elem e;
    e.m = refl_mats_[root_index];
    e.t = rd_.root(root_index).coroot;
    for (long& c : e.t) c *= n;
    return e;
}

Elem Weyl::simple(int i) const {
    require(i >= 0 && i <= rd_.rank(), "generator index out of range");
    if (i == 0) return reflection(rd_.highest_root_index(), 1);
    // the finite simple s_i corresponds to positive root index i-1 in height order
    for (int k = 0; k < rd_.num_positive(); ++k) {
        if (rd_.root(k).height != 1) continue;
        Vec e(rd_.rank(), 0);
        e[i - 1] = 1;
        if (rd_.root(k).simple == e) return reflection(k, 0);
    }
    throw Error("simple root not found");
}

Elem Weyl::translation(const Vec& mu) const {
    Elem e = identity();
    e.t = mu;
    return e;
}

Elem Weyl::mul(const Elem& a, const Elem& b) const {
    Elem c;
    c.m = mat_mul(a.m, b.m);
    c.t = mat_apply(a.m, b.t);
    for (int i = 0; i < rd_.rank(); ++i) c.t[i] += a.t[i];
    return c;
}

Elem Weyl::inv(const Elem& a) const {
    Elem c;
    c.m = mat_inv(a.m);
    Vec mt = mat_apply(c.m, a.t);
    c.t = mt;
    for (long& x : c.t) x = -x;
    return c;
}

std::vector<Elem> Weyl::simple_affine_reflections() const {
    std::vector<Elem> out;
    for (int i = 0; i <= rd_.rank(); ++i) out.push_back(simple(i));
    return out;
}

std::optional<std::pair<int, long>> Weyl::as_reflection(const Elem& a) const {
    for (int k = 0; k < rd_.num_positive(); ++k) {
        if (a.m != refl_mats_[k]) continue;
        const Vec& cv = rd_.root(k).coroot;
        long n = 0;
        bool found = false;
        for (int i = 0; i < rd_.rank(); ++i) {
            if (cv[i] == 0) {
                if (a.t[i] != 0) return std::nullopt;
                continue;
            }
            if (!found) {
                if (a.t[i] % cv[i] != 0) return std::nullopt;
                n = a.t[i] / cv[i];
                found = true;
            } else if (a.t[i] != n * cv[i]) {
                return std::nullopt;
            }
        }
        if (!found) return std::nullopt;
        return std::make_pair(k, n);
    }
    return std::nullopt;
}

Vec Weyl::finite_dual_weight(const Elem& a, const Vec& lambda) const {
    // (w lambda)(v) = lambda(w^{-1} v), so the matrix is the inverse transpose.
    std::vector<Vec> minv = mat_inv(a.m);
    const int r = rd_.rank();
    Vec out(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[i] += minv[j][i] * lambda[j];
    return out;
}

AffineWeight Weyl::act_dual(const Elem& a, const AffineWeight& lam) const {
    AffineWeight out;
    out.x = finite_dual_weight(a, lam.x);
    out.delta = lam.delta - rd_.pairing(out.x, a.t);
    return out;
}

std::optional<AffineRoot> Weyl::reflection_of_edge(const Elem& x, const Elem& y) const {
    require(!(x == y), "reflection_of_edge needs distinct endpoints");
    Elem t = mul(y, inv(x));
    auto refl = as_reflection(t);
    if (!refl) return std::nullopt;
    auto [k, n] = *refl;
    // alpha_t = alpha - n*delta, then normalized positive.
    return rd_.normalize_label(AffineRoot{k + 1, -n});
}

long Weyl::alcove_coord(const Elem& w, int root_index) const {
    // <alpha, w(v)> = <alpha o wbar, v> + <alpha, mu>; the pullback
    // alpha o wbar is the transpose action, no inversion needed.
    const Vec& ax = rd_.root(root_index).x;
    const int r = rd_.rank();
    Vec pulled(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) pulled[i] += w.m[j][i] * ax[j];
    long c = rd_.pairing(ax, w.t);
    int idx = rd_.find_root(pulled);
    if (idx >= 0) return c;  // pulled-back root positive
    return c - 1;
}

long Weyl::length(const Elem& w) const {
    long l = 0;
    for (int k = 0; k < rd_.num_positive(); ++k) l += std::abs(alcove_coord(w, k));
    return l;
}

long Weyl::delta_length(const Elem& w) const {
    long l = 0;
    for (int k = 0; k < rd_.num_positive(); ++k) l += alcove_coord(w, k);
    return l;
}

bool Weyl::bruhat_leq_nomemo(Elem x, Elem y) const {
    while (true) {
        if (x == y) return true;
        long lx = length(x), ly = length(y);
        if (lx >= ly) return false;
        // pick the smallest right descent of y and lift
        int desc = -1;
        for (int i = 0; i <= rd_.rank(); ++i) {
            Elem ys = mul(y, simple(i));
            if (length(ys) < ly) { desc = i; break; }
        }
        require(desc >= 0, "no descent for a non-identity element");
        Elem s = simple(desc);
        y = mul(y, s);
        Elem xs = mul(x, s);
        if (length(xs) < lx) x = xs;
    }
}

bool Weyl::bruhat_leq(const Elem& x, const Elem& y) const {
    {
        std::lock_guard<std::mutex> lk(memo_mu_);
        auto it = bruhat_memo_.find({x, y});
        if (it != bruhat_memo_.end()) return it->second;
    }
    bool ans = bruhat_leq_nomemo(x, y);
    std::lock_guard<std::mutex> lk(memo_mu_);
    bruhat_memo_.emplace(std::make_pair(x, y), ans);
    return ans;
}

bool Weyl::generic_leq(const Elem& x, const Elem& y) const {
    // x =< y in the generic order iff t_lambda x =< t_lambda y in Bruhat
    // order once both translated alcoves sit deep in the dominant chamber.
    if (x == y) return true;
    long margin = 0;
    for (int k = 0; k < rd_.num_positive(); ++k) {
        margin = std::max(margin, std::abs(alcove_coord(x, k)));
        margin = std::max(margin, std::abs(alcove_coord(y, k)));
    }
    margin += 2;
    Vec lam(rd_.rank(), 0);
    for (int k = 0; k < rd_.num_positive(); ++k)
        for (int i = 0; i < rd_.rank(); ++i) lam[i] += margin * rd_.root(k).coroot[i];
    Elem tl = translation(lam);
    return bruhat_leq(mul(tl, x), mul(tl, y));
}

bool Weyl::leq(Order o, const Elem& x, const Elem& y) const {
    return o == Order::Bruhat ? bruhat_leq(x, y) : generic_leq(x, y);
}

std::vector<Elem> Weyl::bruhat_ideal(const Elem& w) const {
    std::vector<int> word = reduced_word(w);
    std::set<Elem> out;
    const size_t n = word.size();
    require(n <= 22, "bruhat_ideal: word too long");
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        Elem p = identity();
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) p = mul(p, simple(word[i]));
        out.insert(p);
    }
    return std::vector<Elem>(out.begin(), out.end());
}

std::vector<int> Weyl::reduced_word(const Elem& w) const {
    std::vector<int> word;
    Elem cur = w;
    long l = length(cur);
    while (l > 0) {
        int pick = -1;
        for (int i = 0; i <= rd_.rank(); ++i) {
            Elem sc = mul(simple(i), cur);
            if (length(sc) < l) { pick = i; break; }
        }
        require(pick >= 0, "stuck while building reduced word");
        word.push_back(pick);
        cur = mul(simple(pick), cur);
        --l;
    }
    return word;
}

std::vector<std::vector<int>> Weyl::all_reduced_words(const Elem& w) const {
    if (w == identity()) return {{}};
    std::vector<std::vector<int>> out;
    long l = length(w);
    for (int i = 0; i <= rd_.rank(); ++i) {
        Elem sw = mul(simple(i), w);
        if (length(sw) != l - 1) continue;
        for (auto& tail : all_reduced_words(sw)) {
            std::vector<int> word;
            word.push_back(i);
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

std::string Weyl::word_str(const Elem& w) const {
    std::string s;
    for (int i : reduced_word(w)) s += std::to_string(i);
    return s;
}

Elem Weyl::parse_word(const std::string& word) const {
    Elem p = identity();
    for (char c : word) {
        if (c == ',' || c == ' ') continue;
        require(c >= '0' && c <= '9', "bad word character: " + std::string(1, c));
        int i = c - '0';
        require(i <= rd_.rank(), "generator index out of range in word: " + word);
        p = mul(p, simple(i));
    }
    return p;
}

Elem Weyl::word_product(const std::vector<int>& word) const {
    Elem p = identity();
    for (int i : word) p = mul(p, simple(i));
    return p;
}

std::vector<Elem> Weyl::ball(long max_length) const {
    std::set<Elem> seen;
    std::deque<Elem> queue;
    seen.insert(identity());
    queue.push_back(identity());
    while (!queue.empty()) {
        Elem w = queue.front();
        queue.pop_front();
        long l = length(w);
        if (l >= max_length) continue;
        for (int i = 0; i <= rd_.rank(); ++i) {
            Elem ws = mul(w, simple(i));
            if (length(ws) == l + 1 && seen.insert(ws).second) queue.push_back(ws);
        }
    }
    return std::vector<Elem>(seen.begin(), seen.end());
}

WallCoset Weyl::wall_of(const Alcove& a, int s) const {
    Elem ws = mul(a.w, simple(s));
    WallCoset b;
    b.s = s;
    b.rep = length(ws) < length(a.w) ? ws : a.w;
    return b;
}

std::pair<int, long> Weyl::wall_hyperplane(const WallCoset& b) const {
    Elem w1 = b.rep, w2 = mul(b.rep, simple(b.s));
    for (int k = 0; k < rd_.num_positive(); ++k) {
        long c1 = alcove_coord(w1, k), c2 = alcove_coord(w2, k);
        if (c1 != c2) {
            require(std::abs(c1 - c2) == 1, "adjacent alcoves differ by one wall");
            return {k, std::max(c1, c2)};
        }
    }
    throw Error("wall hyperplane not found");
}

Alcove Weyl::wall_minus(const WallCoset& b) const {
    auto [k, n] = wall_hyperplane(b);
    Elem w1 = b.rep, w2 = mul(b.rep, simple(b.s));
    return Alcove{alcove_coord(w1, k) < n ? w1 : w2};
}

Alcove Weyl::wall_plus(const WallCoset& b) const {
    auto [k, n] = wall_hyperplane(b);
    Elem w1 = b.rep, w2 = mul(b.rep, simple(b.s));
    return Alcove{alcove_coord(w1, k) >= n ? w1 : w2};
}

Alcove Weyl::beta_up(const Alcove& a, int root_index) const {
    long n = alcove_coord(a.w, root_index) + 1;
    return Alcove{mul(reflection(root_index, n), a.w)};
}

Alcove Weyl::beta_down(const Alcove& a, int root_index) const {
    long n = alcove_coord(a.w, root_index);
    return Alcove{mul(reflection(root_index, n), a.w)};
}

Facet Weyl::beta_up(const Facet& f, int root_index) const {
    if (std::holds_alternative<Alcove>(f)) return beta_up(std::get<Alcove>(f), root_index);
    const WallCoset& b = std::get<WallCoset>(f);
    auto [type, level] = wall_hyperplane(b);
    if (type == root_index) return f;  // wall of type beta is fixed
    long n = alcove_coord(wall_minus(b).w, root_index) + 1;
    // minus and plus alcoves sit on the same side of every beta-hyperplane
    Elem r = reflection(root_index, n);
    Elem w1 = mul(r, b.rep);
    WallCoset out;
    out.s = b.s;
    Elem w2 = mul(w1, simple(b.s));
    out.rep = length(w1) <= length(w2) ? w1 : w2;
    return out;
}

Facet Weyl::beta_down(const Facet& f, int root_index) const {
    if (std::holds_alternative<Alcove>(f)) return beta_down(std::get<Alcove>(f), root_index);
    const WallCoset& b = std::get<WallCoset>(f);
    auto [type, level] = wall_hyperplane(b);
    if (type == root_index) return f;
    long n = alcove_coord(wall_minus(b).w, root_index);
    Elem r = reflection(root_index, n);
    Elem w1 = mul(r, b.rep);
    WallCoset out;
    out.s = b.s;
    Elem w2 = mul(w1, simple(b.s));
    out.rep = length(w1) <= length(w2) ? w1 : w2;
    return out;
}

Elem Weyl::coset_min(Order o, const WallCoset& b) const {
    Elem w1 = b.rep, w2 = mul(b.rep, simple(b.s));
    if (o == Order::Bruhat) return length(w1) <= length(w2) ? w1 : w2;
    return generic_leq(w1, w2) ? w1 : w2;
}

bool Weyl::leq(Order o, const WallCoset& x, const WallCoset& y) const {
    return leq(o, coset_min(o, x), coset_min(o, y));
}

std::vector<Elem> Weyl::antifundamental_box() const {
    long bound = 0;
    for (int k = 0; k < rd_.num_positive(); ++k) bound += rd_.root(k).height;
    std::vector<Elem> out;
    for (const Elem& w : ball(bound)) {
        bool in_box = true;
        for (int k = 0; k < rd_.num_positive(); ++k) {
            if (rd_.root(k).height != 1) continue;
            if (alcove_coord(w, k) != -1) { in_box = false; break; }
        }
        if (in_box) out.push_back(w);
    }
    return out;
}

Elem Weyl::w_hat0() const {
    std::vector<Elem> box = antifundamental_box();
    require(!box.empty(), "empty anti-fundamental box");
    // the element whose alcove is generically smallest in the box
    Elem best = box[0];
    for (const Elem& w : box)
        if (generic_leq(w, best)) best = w;
    for (const Elem& w : box) require(generic_leq(best, w), "box has no generic minimum");
    return best;
}

std::vector<Elem> Weyl::w_circ() const {
    return bruhat_ideal(w_hat0());
}

}  // namespace momgra
