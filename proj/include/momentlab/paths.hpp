#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "momentlab/multipoly.hpp"

namespace momentlab {

enum class Discipline { Motzkin, Lukasiewicz };

std::string_view to_string(Discipline d);

/// Nonnegative lattice path stored as its level sequence pi(0), ..., pi(n)
/// with pi(0) = pi(n) = 0.
class LatticePath {
public:
    /// Validates: starts and ends at 0, never negative, every rise is +1.
    /// Throws MathError(InvalidPath) otherwise.
    explicit LatticePath(std::vector<int> levels);

    /// Parses the text form "0,1,1,0".
    static LatticePath parse(std::string_view text);

    const std::vector<int>& levels() const { return levels_; }
    std::size_t length() const { return levels_.size() - 1; }
    int step(std::size_t i) const { return levels_[i + 1] - levels_[i]; }  // i-th step, 0-based
    bool is_motzkin() const;
    bool is_irreducible() const;
    int height() const;

    std::string to_string() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<int> levels_;
};

/// Depth-first stream of all paths of a given length, steps tried in the order
/// +1, 0, -1, -2, .... Paths are produced one at a time.
class PathStream {
public:
    PathStream(std::size_t length, Discipline discipline, bool irreducible_only = false);

    std::optional<LatticePath> next();

private:
    bool feasible(std::size_t pos, int level) const;
    bool fill_from(std::size_t pos);
    int lowest_step(int level) const;

    std::size_t length_;
    Discipline discipline_;
    bool irreducible_only_;
    std::vector<int> levels_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<LatticePath> enumerate_paths(std::size_t length, Discipline discipline, bool irreducible_only = false);
std::size_t count_paths(std::size_t length, Discipline discipline, bool irreducible_only = false);
void for_each_path(std::size_t length, Discipline discipline, bool irreducible_only,
                   const std::function<void(const LatticePath&)>& visit);

/// Splits at interior returns to level 0. The empty path has no factors.
std::vector<LatticePath> factorize_irreducible(const LatticePath& p);
/// Concatenation of paths that each start and end at 0.
LatticePath concatenate(const std::vector<LatticePath>& parts);
/// |{i >= 1 : pi(i) = 0}|
std::size_t returns_to_zero(const LatticePath& p);

/// Step weights for one of the three path models.
///  - Motzkin/Flajolet: rise 1, horizontal at level y gives a_y, fall from y gives lambda_y.
///  - Lukasiewicz/free: rise 1, drop by k >= 0 gives c_{k+1}.
///  - Lukasiewicz/classical: rise from y gives y+1, drop by k >= 0 gives kappa_{k+1}/k!.
/// Parameter prefixes are finite; touching an index past the prefix throws IndexBeyondPrefix.
class ValuationScheme {
public:
    enum class Kind { MotzkinFlajolet, LukasFree, LukasClassical };

    /// a[y] = a_y; lambda[y-1] = lambda_y.
    static ValuationScheme motzkin(std::vector<MultiPoly> a, std::vector<MultiPoly> lambda);
    /// c[k-1] = c_k.
    static ValuationScheme lukas_free(std::vector<MultiPoly> c);
    /// kappa[k-1] = kappa_k.
    static ValuationScheme lukas_classical(std::vector<MultiPoly> kappa);

    /// Fully symbolic schemes sized for paths up to `max_length`.
    static ValuationScheme symbolic(Kind kind, std::size_t max_length);

    Kind kind() const { return kind_; }
    Discipline discipline() const {
        return kind_ == Kind::MotzkinFlajolet ? Discipline::Motzkin : Discipline::Lukasiewicz;
    }

    /// Weight of the step from level `from` to level `to`.
    MultiPoly step_weight(int from, int to) const;

private:
    ValuationScheme(Kind kind, std::vector<MultiPoly> first, std::vector<MultiPoly> second);

    const MultiPoly& param(const std::vector<MultiPoly>& list, std::size_t i, std::string_view name,
                           unsigned offset) const;

    Kind kind_;
    std::vector<MultiPoly> first_;
    std::vector<MultiPoly> second_;
};

std::string_view to_string(ValuationScheme::Kind kind);

/// Product of step weights. Throws SchemeMismatch on a step the scheme does not allow.
MultiPoly valuate(const LatticePath& p, const ValuationScheme& scheme);

/// Sum of valuations over all (or only irreducible) paths of the scheme's discipline.
MultiPoly path_sum(std::size_t length, const ValuationScheme& scheme, bool irreducible_only = false);

}  // namespace momentlab
