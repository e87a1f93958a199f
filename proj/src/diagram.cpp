#include "hcyl/diagram.hpp"

#include "hcyl/error.hpp"
#include "hcyl/free_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace hcyl {

namespace {

constexpr int kVertexRef = 1 << 20; // code entries >= this refer to vertex slots; below are leg colors

[[noreturn]] void malformed(const std::string& msg)
{
    throw Error(ErrorCode::malformed, "malformed diagram: " + msg);
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int find_root(std::vector<int>& parent, int x)
{
    while (parent[idx(x)] != x) {
        parent[idx(x)] = parent[idx(parent[idx(x)])];
        x = parent[idx(x)];
    }
    return x;
}

bool even_order(const std::array<int, 3>& order, const std::array<int, 3>& cyc)
{
    for (int r = 0; r < 3; ++r)
        if (order[0] == cyc[idx(r)] && order[1] == cyc[idx((r + 1) % 3)] && order[2] == cyc[idx((r + 2) % 3)])
            return true;
    return false;
}

// Canonical labeling of one connected component by exhaustive breadth-first
// traversal. A traversal fixes, for every vertex, which half-edge comes first
// (the one it was reached through) and branches on the order of the other
// two; codes are compared entry by entry so dominated branches are cut early.
class ComponentLabeler {
public:
    ComponentLabeler(const RawDiagram& raw, const std::vector<int>& owner, const std::vector<int>& vertices)
        : raw_(raw), owner_(owner), vertices_(vertices)
    {
        label_.assign(idx(raw.verts), -1);
        order_.resize(vertices.size());
        inv_.resize(vertices.size());
        code_.reserve(3 * vertices.size());
    }

    void run()
    {
        for (int v : vertices_) {
            const auto& cyc = raw_.cyclic[idx(v)];
            for (int r = 0; r < 3; ++r) {
                for (int refl = 0; refl < 2; ++refl) {
                    std::array<int, 3> ord{cyc[idx(r)], cyc[idx((r + 1) % 3)], cyc[idx((r + 2) % 3)]};
                    if (refl)
                        std::swap(ord[1], ord[2]);
                    label_[idx(v)] = 0;
                    inv_[0] = v;
                    order_[0] = ord;
                    labeled_ = 1;
                    step(0, !have_best_);
                    label_[idx(v)] = -1;
                }
            }
        }
    }

    const std::vector<int>& code() const { return best_code_; }
    const std::vector<std::array<int, 3>>& order() const { return best_order_; }
    const std::vector<int>& legs() const { return best_legs_; }
    int sign() const { return best_sign_; }
    bool zero() const { return zero_; }

private:
    // `less` is true once the current prefix is strictly below the best code.
    // Returns false if the entry makes this branch worse than the best.
    bool admit(int entry, int pos, bool& less) const
    {
        if (less)
            return true;
        int b = best_code_[idx(pos)];
        if (entry > b)
            return false;
        if (entry < b)
            less = true;
        return true;
    }

    void step(int pos, bool less)
    {
        if (pos == 3 * labeled_) {
            leaf(less);
            return;
        }
        const int c = pos / 3;
        const int h = order_[idx(c)][idx(pos % 3)];
        const int hm = raw_.mate[idx(h)];
        const int first_leg = 3 * raw_.verts;
        if (hm >= first_leg) {
            const int leg = hm - first_leg;
            const int entry = raw_.colors[idx(leg)];
            if (!admit(entry, pos, less))
                return;
            code_.push_back(entry);
            legs_.push_back(leg);
            step(pos + 1, less);
            legs_.pop_back();
            code_.pop_back();
            return;
        }
        const int w = owner_[idx(hm)];
        const int lw = label_[idx(w)];
        if (lw >= 0) {
            const auto& ow = order_[idx(lw)];
            const int slot = ow[0] == hm ? 0 : (ow[1] == hm ? 1 : 2);
            const int entry = kVertexRef + 3 * lw + slot;
            if (!admit(entry, pos, less))
                return;
            code_.push_back(entry);
            step(pos + 1, less);
            code_.pop_back();
            return;
        }
        const int nl = labeled_;
        const int entry = kVertexRef + 3 * nl;
        if (!admit(entry, pos, less))
            return;
        const auto& cyc = raw_.cyclic[idx(w)];
        int a = -1, b = -1;
        for (int x : cyc) {
            if (x == hm)
                continue;
            (a < 0 ? a : b) = x;
        }
        code_.push_back(entry);
        label_[idx(w)] = nl;
        inv_[idx(nl)] = w;
        ++labeled_;
        order_[idx(nl)] = {hm, a, b};
        step(pos + 1, less);
        order_[idx(nl)] = {hm, b, a};
        // The first branch may have replaced the best code by one sharing this
        // prefix, in which case the sibling has to compare again.
        step(pos + 1, less && !prefix_matches_best(pos));
        --labeled_;
        label_[idx(w)] = -1;
        code_.pop_back();
    }

    bool prefix_matches_best(int pos) const
    {
        for (int i = 0; i <= pos; ++i)
            if (code_[idx(i)] != best_code_[idx(i)])
                return false;
        return true;
    }

    void leaf(bool less)
    {
        int sign = 1;
        for (int c = 0; c < labeled_; ++c)
            if (!even_order(order_[idx(c)], raw_.cyclic[idx(inv_[idx(c)])]))
                sign = -sign;
        if (!have_best_ || less) {
            have_best_ = true;
            best_code_ = code_;
            best_order_.assign(order_.begin(), order_.begin() + labeled_);
            best_legs_ = legs_;
            best_sign_ = sign;
            zero_ = false;
        } else if (sign != best_sign_) {
            zero_ = true;
        }
    }

    const RawDiagram& raw_;
    const std::vector<int>& owner_;
    const std::vector<int>& vertices_;

    std::vector<int> label_;
    std::vector<int> inv_;
    std::vector<std::array<int, 3>> order_;
    std::vector<int> legs_;
    std::vector<int> code_;
    int labeled_ = 0;

    bool have_best_ = false;
    std::vector<int> best_code_;
    std::vector<std::array<int, 3>> best_order_;
    std::vector<int> best_legs_;
    int best_sign_ = 1;
    bool zero_ = false;
};

} // namespace

void RawDiagram::validate() const
{
    if (verts < 0)
        malformed("negative vertex count");
    if (static_cast<int>(cyclic.size()) != verts)
        malformed("expected " + std::to_string(verts) + " cyclic triples, got " + std::to_string(cyclic.size()));
    const int n = half_edges();
    if (static_cast<int>(mate.size()) != n)
        malformed("edge involution must cover all " + std::to_string(n) + " half-edges");
    std::vector<int> seen(idx(3 * verts), 0);
    for (const auto& t : cyclic)
        for (int h : t) {
            if (h < 0 || h >= 3 * verts)
                malformed("cyclic order mentions half-edge " + std::to_string(h) + " outside 0.." +
                          std::to_string(3 * verts - 1));
            if (seen[idx(h)]++)
                malformed("half-edge " + std::to_string(h) + " listed twice");
        }
    for (int h = 0; h < n; ++h) {
        int m = mate[idx(h)];
        if (m < 0 || m >= n || m == h || mate[idx(m)] != h)
            malformed("edge pairing is not a fixed-point-free involution at half-edge " + std::to_string(h));
        if (h >= 3 * verts && m >= 3 * verts)
            malformed("degree-0 strut (leg joined to leg) is not allowed");
    }
    for (int c : colors)
        if (c < 0 || c >= kVertexRef)
            malformed("leg color out of range");
}

int Diagram::components() const
{
    std::vector<int> parent(idx(verts_));
    std::iota(parent.begin(), parent.end(), 0);
    for (int h = 0; h < 3 * verts_; ++h) {
        int m = mate_[idx(h)];
        if (m < 3 * verts_)
            parent[idx(find_root(parent, h / 3))] = find_root(parent, m / 3);
    }
    int count = 0;
    for (int v = 0; v < verts_; ++v)
        if (find_root(parent, v) == v)
            ++count;
    return count;
}

int Diagram::loop_rank() const
{
    const int vertices = verts_ + legs();
    const int edges = (3 * verts_ + legs()) / 2;
    return edges - vertices + components();
}

RawDiagram Diagram::raw() const
{
    RawDiagram r;
    r.verts = verts_;
    r.cyclic.resize(idx(verts_));
    for (int v = 0; v < verts_; ++v)
        r.cyclic[idx(v)] = {3 * v, 3 * v + 1, 3 * v + 2};
    r.mate = mate_;
    r.colors = colors_;
    return r;
}

Canonical canonicalize(const RawDiagram& raw)
{
    raw.validate();
    const int k = raw.verts;
    std::vector<int> owner(idx(3 * k));
    for (int v = 0; v < k; ++v)
        for (int h : raw.cyclic[idx(v)])
            owner[idx(h)] = v;

    std::vector<int> parent(idx(k));
    std::iota(parent.begin(), parent.end(), 0);
    for (int h = 0; h < 3 * k; ++h) {
        int m = raw.mate[idx(h)];
        if (m < 3 * k)
            parent[idx(find_root(parent, owner[idx(h)]))] = find_root(parent, owner[idx(m)]);
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < k; ++v)
        groups[find_root(parent, v)].push_back(v);

    struct Piece {
        std::vector<int> code;
        std::vector<std::array<int, 3>> order;
        std::vector<int> legs;
    };
    std::vector<Piece> pieces;
    Canonical out;
    for (auto& [root, vertices] : groups) {
        ComponentLabeler labeler(raw, owner, vertices);
        labeler.run();
        if (labeler.zero())
            out.zero = true;
        out.sign *= labeler.sign();
        pieces.push_back({labeler.code(), labeler.order(), labeler.legs()});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.order.size() != b.order.size())
            return a.order.size() < b.order.size();
        return a.code < b.code;
    });

    const int legs = raw.legs();
    std::vector<int> to_canon(idx(3 * k + legs));
    std::vector<int> colors(idx(legs));
    int voff = 0, loff = 0;
    for (const Piece& p : pieces) {
        for (int c = 0; c < static_cast<int>(p.order.size()); ++c)
            for (int s = 0; s < 3; ++s)
                to_canon[idx(p.order[idx(c)][idx(s)])] = 3 * (voff + c) + s;
        for (int d = 0; d < static_cast<int>(p.legs.size()); ++d) {
            to_canon[idx(3 * k + p.legs[idx(d)])] = 3 * k + loff + d;
            colors[idx(loff + d)] = raw.colors[idx(p.legs[idx(d)])];
        }
        voff += static_cast<int>(p.order.size());
        loff += static_cast<int>(p.legs.size());
    }
    out.diagram.verts_ = k;
    out.diagram.mate_.assign(idx(3 * k + legs), 0);
    for (int h = 0; h < 3 * k + legs; ++h)
        out.diagram.mate_[idx(to_canon[idx(h)])] = to_canon[idx(raw.mate[idx(h)])];
    out.diagram.colors_ = std::move(colors);
    return out;
}

DiagramSum DiagramSum::of(const Diagram& d, const Rational& c)
{
    DiagramSum s;
    s.add(d, c);
    return s;
}

DiagramSum DiagramSum::of(const RawDiagram& raw, const Rational& c)
{
    DiagramSum s;
    s.add(raw, c);
    return s;
}

DiagramSum DiagramSum::unit()
{
    return of(Diagram{});
}

Rational DiagramSum::coefficient(const Diagram& d) const
{
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiagramSum::add(const Diagram& d, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void DiagramSum::add(const RawDiagram& raw, const Rational& c)
{
    if (c == 0)
        return;
    Canonical canon = canonicalize(raw);
    if (canon.zero)
        return;
    add(canon.diagram, canon.sign > 0 ? c : Rational(-c));
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& other)
{
    for (const auto& [d, c] : other.terms_)
        add(d, c);
    return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& other)
{
    for (const auto& [d, c] : other.terms_)
        add(d, -c);
    return *this;
}

std::string DiagramSum::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += hcyl::to_string(mag) + "*";
        out += describe(d);
    }
    return out;
}

DiagramSum operator+(DiagramSum a, const DiagramSum& b)
{
    a += b;
    return a;
}

DiagramSum operator-(DiagramSum a, const DiagramSum& b)
{
    a -= b;
    return a;
}

DiagramSum operator*(const Rational& c, const DiagramSum& a)
{
    DiagramSum out;
    if (c == 0)
        return out;
    for (const auto& [d, x] : a.terms())
        out.add(d, c * x);
    return out;
}

RawDiagram tripod(int a, int b, int c)
{
    RawDiagram r;
    r.verts = 1;
    r.cyclic = {{0, 1, 2}};
    r.colors = {a, c, b};
    r.mate = {3, 4, 5, 0, 1, 2};
    return r;
}

std::string describe(const Diagram& d, int rank)
{
    auto name = [&](int color) {
        if (rank > 0)
            return generator_name(rank, color);
        return "g" + std::to_string(color + 1);
    };
    if (d.is_empty())
        return "1";
    const auto& mate = d.mate();
    const int k = d.degree();
    if (k == 1 && d.legs() == 3) {
        // stored counterclockwise; Y(...) lists clockwise
        const auto& c = d.colors();
        return "Y(" + name(c[idx(mate[0] - 3)]) + "," + name(c[idx(mate[2] - 3)]) + "," + name(c[idx(mate[1] - 3)]) + ")";
    }
    std::string out = "G[";
    for (int v = 0; v < k; ++v) {
        out += v ? " " : "";
        out += "v" + std::to_string(v) + "(";
        for (int s = 0; s < 3; ++s) {
            int m = mate[idx(3 * v + s)];
            out += s ? "," : "";
            if (m >= 3 * k)
                out += name(d.colors()[idx(m - 3 * k)]);
            else
                out += "v" + std::to_string(m / 3) + "." + std::to_string(m % 3);
        }
        out += ")";
    }
    return out + "]";
}

RawDiagram glue(const Diagram& a, const Diagram& b, const std::vector<std::pair<int, int>>& pairs)
{
    const int ka = a.degree(), kb = b.degree();
    const int k = ka + kb;
    std::vector<int> glued_a(idx(a.legs()), -1), glued_b(idx(b.legs()), -1);
    for (auto [la, lb] : pairs) {
        if (la < 0 || la >= a.legs() || lb < 0 || lb >= b.legs())
            malformed("glued leg index out of range");
        if (glued_a[idx(la)] >= 0 || glued_b[idx(lb)] >= 0)
            malformed("a leg can be glued at most once");
        glued_a[idx(la)] = lb;
        glued_b[idx(lb)] = la;
    }
    const int legs = a.legs() + b.legs() - 2 * static_cast<int>(pairs.size());
    RawDiagram r;
    r.verts = k;
    r.cyclic.resize(idx(k));
    for (int v = 0; v < k; ++v)
        r.cyclic[idx(v)] = {3 * v, 3 * v + 1, 3 * v + 2};
    r.mate.assign(idx(3 * k + legs), -1);
    r.colors.reserve(idx(legs));

    // new half-edge id of every surviving leg
    std::vector<int> leg_a(idx(a.legs()), -1), leg_b(idx(b.legs()), -1);
    for (int j = 0; j < a.legs(); ++j)
        if (glued_a[idx(j)] < 0) {
            leg_a[idx(j)] = 3 * k + static_cast<int>(r.colors.size());
            r.colors.push_back(a.colors()[idx(j)]);
        }
    for (int j = 0; j < b.legs(); ++j)
        if (glued_b[idx(j)] < 0) {
            leg_b[idx(j)] = 3 * k + static_cast<int>(r.colors.size());
            r.colors.push_back(b.colors()[idx(j)]);
        }

    auto map_a = [&](int h) -> int {
        if (h < 3 * ka)
            return h;
        int j = h - 3 * ka;
        if (glued_a[idx(j)] < 0)
            return leg_a[idx(j)];
        return 3 * ka + b.mate()[idx(3 * kb + glued_a[idx(j)])];
    };
    auto map_b = [&](int h) -> int {
        if (h < 3 * kb)
            return 3 * ka + h;
        int j = h - 3 * kb;
        if (glued_b[idx(j)] < 0)
            return leg_b[idx(j)];
        return a.mate()[idx(3 * ka + glued_b[idx(j)])];
    };
    for (int h = 0; h < 3 * ka; ++h)
        r.mate[idx(h)] = map_a(a.mate()[idx(h)]);
    for (int h = 0; h < 3 * kb; ++h)
        r.mate[idx(3 * ka + h)] = map_b(b.mate()[idx(h)]);
    for (int j = 0; j < a.legs(); ++j)
        if (leg_a[idx(j)] >= 0)
            r.mate[idx(leg_a[idx(j)])] = a.mate()[idx(3 * ka + j)];
    for (int j = 0; j < b.legs(); ++j)
        if (leg_b[idx(j)] >= 0)
            r.mate[idx(leg_b[idx(j)])] = 3 * ka + b.mate()[idx(3 * kb + j)];
    return r;
}

DiagramSum expand_multilinear(const ColoredShape& d)
{
    const RawDiagram& shape = d.shape;
    if (static_cast<int>(d.leg_colors.size()) != shape.legs())
        malformed("one H vector per leg required");
    DiagramSum out;
    RawDiagram current = shape;
    auto rec = [&](auto&& self, int leg, const Rational& coeff) -> void {
        if (leg == shape.legs()) {
            out.add(current, coeff);
            return;
        }
        const HVector& v = d.leg_colors[idx(leg)];
        for (int g = 0; g < static_cast<int>(v.coords.size()); ++g) {
            const Rational& x = v.coords[idx(g)];
            if (x == 0)
                continue;
            current.colors[idx(leg)] = g;
            self(self, leg + 1, coeff * x);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

std::vector<Diagram> enumerate_shapes(int degree, bool trees_only)
{
    if (degree < 1)
        throw Error(ErrorCode::out_of_range, "diagram degree must be at least 1");
    const int k = degree;
    std::map<Diagram, int> found;
    for (int legs = k + 2; legs >= 0; legs -= 2) {
        if (legs > 3 * k || (trees_only && legs != k + 2))
            continue;
        // choose which vertex half-edges carry legs, then pair the rest
        std::vector<int> chosen;
        auto pair_rest = [&](std::vector<int>& mate, std::vector<int> free) {
            auto rec = [&](auto&& self, std::vector<int>& rest) -> void {
                if (rest.empty()) {
                    RawDiagram r;
                    r.verts = k;
                    r.cyclic.resize(idx(k));
                    for (int v = 0; v < k; ++v)
                        r.cyclic[idx(v)] = {3 * v, 3 * v + 1, 3 * v + 2};
                    r.mate = mate;
                    r.colors.assign(idx(legs), 0);
                    Canonical c = canonicalize(r);
                    if (c.diagram.is_connected() && (!trees_only || c.diagram.loop_rank() == 0))
                        found.emplace(c.diagram, 0);
                    return;
                }
                int first = rest.front();
                for (std::size_t i = 1; i < rest.size(); ++i) {
                    int other = rest[i];
                    std::vector<int> next;
                    next.reserve(rest.size() - 2);
                    for (std::size_t j = 1; j < rest.size(); ++j)
                        if (j != i)
                            next.push_back(rest[j]);
                    mate[idx(first)] = other;
                    mate[idx(other)] = first;
                    self(self, next);
                }
            };
            rec(rec, free);
        };
        auto choose = [&](auto&& self, int start) -> void {
            if (static_cast<int>(chosen.size()) == legs) {
                std::vector<int> mate(idx(3 * k + legs), -1);
                std::vector<bool> used(idx(3 * k), false);
                for (int j = 0; j < legs; ++j) {
                    mate[idx(chosen[idx(j)])] = 3 * k + j;
                    mate[idx(3 * k + j)] = chosen[idx(j)];
                    used[idx(chosen[idx(j)])] = true;
                }
                std::vector<int> free;
                for (int h = 0; h < 3 * k; ++h)
                    if (!used[idx(h)])
                        free.push_back(h);
                pair_rest(mate, free);
                return;
            }
            for (int h = start; h < 3 * k; ++h) {
                chosen.push_back(h);
                self(self, h + 1);
                chosen.pop_back();
            }
        };
        choose(choose, 0);
    }
    std::vector<Diagram> out;
    for (auto& [d, unused] : found)
        out.push_back(d);
    return out;
}

std::vector<Canonical> enumerate_colored(int degree, int rank, bool trees_only)
{
    if (rank < 1)
        throw Error(ErrorCode::out_of_range, "rank must be at least 1");
    std::map<Diagram, Canonical> found;
    for (const Diagram& shape : enumerate_shapes(degree, trees_only)) {
        RawDiagram r = shape.raw();
        const int legs = r.legs();
        std::vector<int> digits(idx(legs), 0);
        while (true) {
            r.colors = digits;
            Canonical c = canonicalize(r);
            found.try_emplace(c.diagram, c);
            int i = legs - 1;
            while (i >= 0 && digits[idx(i)] == rank - 1)
                digits[idx(i--)] = 0;
            if (i < 0)
                break;
            ++digits[idx(i)];
        }
    }
    std::vector<Canonical> out;
    out.reserve(found.size());
    for (auto& [d, c] : found) {
        c.sign = 1;
        out.push_back(c);
    }
    return out;
}

std::array<RawDiagram, 3> ihx_terms(const RawDiagram& d, int half_edge)
{
    d.validate();
    const int k = d.verts;
    if (half_edge < 0 || half_edge >= 3 * k)
        malformed("IHX edge must start at a trivalent vertex");
    const int hv = d.mate[idx(half_edge)];
    if (hv >= 3 * k)
        malformed("IHX needs an internal edge, not a leg");
    int u = -1, v = -1;
    for (int x = 0; x < k; ++x)
        for (int h : d.cyclic[idx(x)]) {
            if (h == half_edge)
                u = x;
            if (h == hv)
                v = x;
        }
    if (u == v)
        malformed("IHX is undefined on a self-loop");
    auto rotated = [](const std::array<int, 3>& t, int first) {
        int r = t[0] == first ? 0 : (t[1] == first ? 1 : 2);
        return std::array<int, 3>{t[idx(r)], t[idx((r + 1) % 3)], t[idx((r + 2) % 3)]};
    };
    auto cu = rotated(d.cyclic[idx(u)], half_edge);
    auto cv = rotated(d.cyclic[idx(v)], hv);
    const int a = cu[1], b = cu[2], c = cv[1], dd = cv[2];
    std::array<RawDiagram, 3> out{d, d, d};
    out[0].cyclic[idx(u)] = {half_edge, a, b};
    out[0].cyclic[idx(v)] = {hv, c, dd};
    out[1].cyclic[idx(u)] = {half_edge, b, c};
    out[1].cyclic[idx(v)] = {hv, a, dd};
    out[2].cyclic[idx(u)] = {half_edge, c, a};
    out[2].cyclic[idx(v)] = {hv, b, dd};
    return out;
}

std::vector<DiagramSum> ihx_relators(int degree, int rank, bool trees_only)
{
    std::vector<DiagramSum> out;
    for (const Canonical& c : enumerate_colored(degree, rank, trees_only)) {
        RawDiagram r = c.diagram.raw();
        for (int h = 0; h < 3 * r.verts; ++h) {
            int m = r.mate[idx(h)];
            if (m >= 3 * r.verts || m < h || m / 3 == h / 3)
                continue;
            DiagramSum rel;
            for (const RawDiagram& t : ihx_terms(r, h))
                rel.add(t, 1);
            if (!rel.is_zero())
                out.push_back(std::move(rel));
        }
    }
    return out;
}

SparseVector TreeSpace::to_vector(const DiagramSum& s) const
{
    SparseVector v;
    for (const auto& [d, c] : s.terms()) {
        auto it = std::lower_bound(trees.begin(), trees.end(), d);
        if (it == trees.end() || *it != d)
            throw Error(ErrorCode::malformed, "diagram " + describe(d) + " is not a degree-" + std::to_string(degree) +
                                                  " rank-" + std::to_string(rank) + " tree");
        v.emplace(static_cast<int>(it - trees.begin()), c);
    }
    return v;
}

DiagramSum TreeSpace::reduce(const DiagramSum& s) const
{
    DiagramSum out;
    for (const auto& [i, c] : relations.reduce(to_vector(s)))
        out.add(trees[idx(i)], c);
    return out;
}

bool TreeSpace::equal_mod_ihx(const DiagramSum& a, const DiagramSum& b) const
{
    return reduce(a - b).is_zero();
}

const TreeSpace& tree_space(int degree, int rank)
{
    if (degree < 1 || degree > 3 || rank < 1 || rank > 6)
        throw Error(ErrorCode::bounds, "tree_space is enumerated only for degree 1..3 and rank <= 6 (got degree " +
                                           std::to_string(degree) + ", rank " + std::to_string(rank) + ")");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, TreeSpace> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({degree, rank}); it != cache.end())
            return it->second;
    }
    TreeSpace ts{degree, rank, {}, {}, {}};
    for (const Canonical& c : enumerate_colored(degree, rank, true))
        if (!c.zero)
            ts.trees.push_back(c.diagram);
    for (const DiagramSum& rel : ihx_relators(degree, rank, true))
        ts.relations.insert(ts.to_vector(rel));
    for (int i = 0; i < static_cast<int>(ts.trees.size()); ++i)
        if (!ts.relations.is_pivot(i))
            ts.basis.push_back(ts.trees[idx(i)]);
    std::lock_guard lock(mutex);
    return cache.try_emplace({degree, rank}, std::move(ts)).first->second;
}

} // namespace hcyl
