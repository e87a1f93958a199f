#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hcyl {

/// One letter g_{gen+1}^{sign} of a free-group word. `gen` is 0-based.
struct Letter {
    int gen = 0;
    int sign = 1;

    auto operator<=>(const Letter&) const = default;
};

/// How generator names are printed. Symplectic naming uses x_i = g_{2i-1},
/// y_i = g_{2i} and is only available for even rank.
enum class Naming { automatic, plain, symplectic };

/// Freely reduced word in the free group on `rank` generators.
/// Reduction happens on construction, so every value is a normal form and
/// equality of words is equality in F.
class GroupWord {
public:
    explicit GroupWord(int rank = 1);
    GroupWord(int rank, std::vector<Letter> letters);

    static GroupWord generator(int rank, int gen, int sign = 1);

    int rank() const noexcept { return rank_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }

    std::string to_string(Naming naming = Naming::automatic) const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

private:
    int rank_;
    std::vector<Letter> letters_;
};

/// Name of generator `gen` (0-based): "x1"/"y1"/... or "g1"/"g2"/...
std::string generator_name(int rank, int gen, Naming naming = Naming::automatic);

/// Parses the word grammar
///   word := term* ; term := gen ["^" int] | "[" word "," word "]" ["^" int]
///         | "(" word ")" ["^" int] ; gen := ("x"|"y"|"g") digits
/// Commutators expand as [u,v] = u v u^-1 v^-1.
GroupWord parse_word(std::string_view text, int rank);

GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& u);
GroupWord power(const GroupWord& u, long exponent);
/// [u,v] = u v u^-1 v^-1
GroupWord commutator(const GroupWord& u, const GroupWord& v);

inline GroupWord operator*(const GroupWord& u, const GroupWord& v) { return multiply(u, v); }

/// omega_g = [x1,y1]...[xg,yg] in the free group of rank 2g.
GroupWord surface_relator(int genus);

} // namespace hcyl
