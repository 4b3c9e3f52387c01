#include "momentlab/paths.hpp"

#include <algorithm>
#include <charconv>

#include "momentlab/error.hpp"

namespace momentlab {

std::string_view to_string(Discipline d) { return d == Discipline::Motzkin ? "motzkin" : "lukasiewicz"; }

// ---------------------------------------------------------------- LatticePath

LatticePath::LatticePath(std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw MathError(ErrorKind::InvalidPath, "a path needs at least one point");
    if (levels_.front() != 0 || levels_.back() != 0) {
        throw MathError(ErrorKind::InvalidPath, "path must start and end at level 0: " + to_string());
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (levels_[i] < 0) throw MathError(ErrorKind::InvalidPath, "negative level in " + to_string());
        if (i > 0 && levels_[i] - levels_[i - 1] > 1) {
            throw MathError(ErrorKind::InvalidPath, "rise by more than one in " + to_string());
        }
    }
}

LatticePath LatticePath::parse(std::string_view text) {
    std::vector<int> levels;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw MathError(ErrorKind::ParseError, "bad level '" + std::string(item) + "' in path text");
        }
        levels.push_back(value);
        pos = comma + 1;
    }
    return LatticePath(std::move(levels));
}

bool LatticePath::is_motzkin() const {
    for (std::size_t i = 0; i < length(); ++i) {
        if (step(i) < -1) return false;
    }
    return true;
}

bool LatticePath::is_irreducible() const { return returns_to_zero(*this) == 1; }

int LatticePath::height() const { return *std::max_element(levels_.begin(), levels_.end()); }

std::string LatticePath::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(levels_[i]);
    }
    return out;
}

// ---------------------------------------------------------------- enumeration

PathStream::PathStream(std::size_t length, Discipline discipline, bool irreducible_only)
    : length_(length), discipline_(discipline), irreducible_only_(irreducible_only), levels_(length + 1, 0) {}

bool PathStream::feasible(std::size_t pos, int level) const {
    if (level < 0) return false;
    const std::size_t remaining = length_ - pos;
    if (remaining == 0) return level == 0;
    if (irreducible_only_ && pos > 0 && level == 0) return false;
    if (discipline_ == Discipline::Motzkin) return static_cast<std::size_t>(level) <= remaining;
    return true;
}

int PathStream::lowest_step(int level) const { return discipline_ == Discipline::Motzkin ? -1 : -level; }

// Completes levels_[pos+1..] with the first feasible step at each position.
bool PathStream::fill_from(std::size_t pos) {
    for (std::size_t i = pos; i < length_; ++i) {
        const int y = levels_[i];
        bool placed = false;
        for (int s = 1; s >= lowest_step(y); --s) {
            if (feasible(i + 1, y + s)) {
                levels_[i + 1] = y + s;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    return true;
}

std::optional<LatticePath> PathStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        // The empty path is reducible (it has no irreducible factors).
        if ((length_ == 0 && irreducible_only_) || !fill_from(0)) {
            done_ = true;
            return std::nullopt;
        }
        return LatticePath(levels_);
    }
    for (std::size_t pos = length_; pos-- > 0;) {
        const int y = levels_[pos];
        for (int s = levels_[pos + 1] - y - 1; s >= lowest_step(y); --s) {
            if (feasible(pos + 1, y + s)) {
                levels_[pos + 1] = y + s;
                if (fill_from(pos + 1)) return LatticePath(levels_);
            }
        }
    }
    done_ = true;
    return std::nullopt;
}

void for_each_path(std::size_t length, Discipline discipline, bool irreducible_only,
                   const std::function<void(const LatticePath&)>& visit) {
    PathStream stream(length, discipline, irreducible_only);
    while (auto p = stream.next()) visit(*p);
}

std::vector<LatticePath> enumerate_paths(std::size_t length, Discipline discipline, bool irreducible_only) {
    std::vector<LatticePath> out;
    for_each_path(length, discipline, irreducible_only, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

std::size_t count_paths(std::size_t length, Discipline discipline, bool irreducible_only) {
    std::size_t n = 0;
    for_each_path(length, discipline, irreducible_only, [&](const LatticePath&) { ++n; });
    return n;
}

// ---------------------------------------------------------------- factorization

std::vector<LatticePath> factorize_irreducible(const LatticePath& p) {
    std::vector<LatticePath> factors;
    const auto& lv = p.levels();
    std::size_t start = 0;
    for (std::size_t i = 1; i < lv.size(); ++i) {
        if (lv[i] == 0) {
            factors.emplace_back(std::vector<int>(lv.begin() + static_cast<std::ptrdiff_t>(start),
                                                  lv.begin() + static_cast<std::ptrdiff_t>(i) + 1));
            start = i;
        }
    }
    return factors;
}

LatticePath concatenate(const std::vector<LatticePath>& parts) {
    std::vector<int> levels{0};
    for (const auto& part : parts) levels.insert(levels.end(), part.levels().begin() + 1, part.levels().end());
    return LatticePath(std::move(levels));
}

std::size_t returns_to_zero(const LatticePath& p) {
    const auto& lv = p.levels();
    return static_cast<std::size_t>(std::count(lv.begin() + 1, lv.end(), 0));
}

// ---------------------------------------------------------------- valuations

std::string_view to_string(ValuationScheme::Kind kind) {
    switch (kind) {
        case ValuationScheme::Kind::MotzkinFlajolet: return "motzkin";
        case ValuationScheme::Kind::LukasFree: return "lukas-free";
        case ValuationScheme::Kind::LukasClassical: return "lukas-classical";
    }
    return "?";
}

ValuationScheme::ValuationScheme(Kind kind, std::vector<MultiPoly> first, std::vector<MultiPoly> second)
    : kind_(kind), first_(std::move(first)), second_(std::move(second)) {}

ValuationScheme ValuationScheme::motzkin(std::vector<MultiPoly> a, std::vector<MultiPoly> lambda) {
    return {Kind::MotzkinFlajolet, std::move(a), std::move(lambda)};
}

ValuationScheme ValuationScheme::lukas_free(std::vector<MultiPoly> c) { return {Kind::LukasFree, std::move(c), {}}; }

ValuationScheme ValuationScheme::lukas_classical(std::vector<MultiPoly> kappa) {
    return {Kind::LukasClassical, std::move(kappa), {}};
}

ValuationScheme ValuationScheme::symbolic(Kind kind, std::size_t max_length) {
    std::vector<MultiPoly> first;
    std::vector<MultiPoly> second;
    switch (kind) {
        case Kind::MotzkinFlajolet:
            // horizontal at level y needs y <= (n-1)/2; fall from y needs y <= n/2
            for (unsigned y = 0; max_length > 0 && y <= (max_length - 1) / 2; ++y) first.emplace_back(sym_a(y));
            for (unsigned y = 1; y <= max_length / 2; ++y) second.emplace_back(sym_lambda(y));
            break;
        case Kind::LukasFree:
            for (unsigned k = 1; k <= max_length; ++k) first.emplace_back(sym_c(k));
            break;
        case Kind::LukasClassical:
            for (unsigned k = 1; k <= max_length; ++k) first.emplace_back(sym_kappa(k));
            break;
    }
    return {kind, std::move(first), std::move(second)};
}

const MultiPoly& ValuationScheme::param(const std::vector<MultiPoly>& list, std::size_t i, std::string_view name,
                                        unsigned offset) const {
    if (i >= list.size()) {
        throw MathError(ErrorKind::IndexBeyondPrefix,
                        std::string(name) + "_" + std::to_string(i + offset) + " is beyond the parameter prefix",
                        static_cast<long>(i + offset));
    }
    return list[i];
}

MultiPoly ValuationScheme::step_weight(int from, int to) const {
    const int d = to - from;
    if (from < 0 || to < 0 || d > 1) {
        throw MathError(ErrorKind::SchemeMismatch,
                        "illegal step " + std::to_string(from) + "->" + std::to_string(to));
    }
    switch (kind_) {
        case Kind::MotzkinFlajolet:
            if (d == 1) return MultiPoly(1);
            if (d == 0) return param(first_, static_cast<std::size_t>(from), "a", 0);
            if (d == -1) return param(second_, static_cast<std::size_t>(from - 1), "lambda", 1);
            throw MathError(ErrorKind::SchemeMismatch,
                            "Motzkin scheme has no fall by " + std::to_string(-d) + " (" + std::to_string(from) +
                                "->" + std::to_string(to) + ")");
        case Kind::LukasFree:
            if (d == 1) return MultiPoly(1);
            return param(first_, static_cast<std::size_t>(-d), "c", 1);
        case Kind::LukasClassical:
            if (d == 1) return MultiPoly(Rational(from + 1));
            return param(first_, static_cast<std::size_t>(-d), "kappa", 1) *
                   (Rational(1) / factorial(static_cast<unsigned>(-d)));
    }
    return {};
}

MultiPoly valuate(const LatticePath& p, const ValuationScheme& scheme) {
    MultiPoly v(1);
    for (std::size_t i = 0; i < p.length(); ++i) v *= scheme.step_weight(p.levels()[i], p.levels()[i + 1]);
    return v;
}

MultiPoly path_sum(std::size_t length, const ValuationScheme& scheme, bool irreducible_only) {
    MultiPoly total;
    for_each_path(length, scheme.discipline(), irreducible_only,
                  [&](const LatticePath& p) { total += valuate(p, scheme); });
    return total;
}

}  // namespace momentlab
