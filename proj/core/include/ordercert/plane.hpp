#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ordercert/skew.hpp"

namespace ordercert {

/// eta g eta for a vertical skew g = (phi, psi), where eta swaps coordinates:
/// the map (x, y) -> (x + psi(y), phi(y)). eta itself is never a group
/// element; it only appears through this conjugation.
struct HSkewElement {
  SkewElement inner;

  Point operator()(const Point& p) const {
    const Point q = inner({p.y, p.x});
    return {q.y, q.x};
  }

  friend bool operator==(const HSkewElement&, const HSkewElement&) = default;
};

enum class LetterKind { V, H };

struct PlaneLetter {
  LetterKind kind;
  SkewElement element;  // for H letters, the inner element

  Point operator()(const Point& p) const;
  friend bool operator==(const PlaneLetter&, const PlaneLetter&) = default;
};

/// Applies raw letters left to right without simplifying.
Point evaluate_letters(std::span<const PlaneLetter> letters, const Point& p);

/// Simplified form of a letter sequence: adjacent letters of one kind are
/// merged, identities dropped, pure translations stored as V letters and
/// absorbed into a neighbouring H letter when no V neighbour exists.
std::vector<PlaneLetter> simplify(std::vector<PlaneLetter> letters);

/// Element of the plane group, stored as a simplified letter sequence.
class PlaneWord {
 public:
  PlaneWord() = default;
  explicit PlaneWord(std::vector<PlaneLetter> letters);
  static PlaneWord vertical(SkewElement g);
  static PlaneWord horizontal(SkewElement inner);

  const std::vector<PlaneLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  Point operator()(const Point& p) const { return evaluate_letters(letters_, p); }

  friend PlaneWord operator*(const PlaneWord& a, const PlaneWord& b);
  friend bool operator==(const PlaneWord&, const PlaneWord&) = default;

 private:
  std::vector<PlaneLetter> letters_;
};

PlaneWord inverse(const PlaneWord& w);
PlaneWord power(const PlaneWord& w, long n);
PlaneWord conjugate(const PlaneWord& w, const PlaneWord& by);
inline Point evaluate(const PlaneWord& w, const Point& p) { return w(p); }

/// The six generators of H: alpha, beta, gamma, delta, gamma^eta, delta^eta.
enum class PlaneSymbol { Alpha, Beta, Gamma, Delta, GammaEta, DeltaEta };

std::string_view plane_symbol_name(PlaneSymbol s);
/// Accepts a, b, c, d, ch, dh, full names (gamma_eta...), and Greek letters.
std::optional<PlaneSymbol> parse_plane_symbol(std::string_view text);

PlaneWord h_generator(PlaneSymbol s, const GeneratorSet& gens = GeneratorSet::standard());

/// Conjugation by eta: swaps the kind of every letter.
PlaneWord eta_conjugate(const PlaneWord& w);

/// Controls the search for a point separating two words.
struct WitnessSearch {
  int max_denominator = 24;
  long grid_bound = 2;  // grid covers [-bound, bound]^2
  int random_points = 64;
  long random_max_denominator = 1000;
  std::uint64_t seed = 0x5eed0f0e1c3a7e5ULL;
};

struct EqualityVerdict {
  enum class Kind { Equal, Distinct, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Point> witness;  // set iff Distinct
};

/// Equal only on identical simplified forms; Distinct only with a rational
/// point whose images differ; Unknown otherwise.
EqualityVerdict equal_or_unknown(const PlaneWord& a, const PlaneWord& b, const WitnessSearch& search = {});

/// Images of F1..F8 under eta, computed in the horizontal copy.
RelationReport verify_mirrored_relations(const GeneratorSet& gens = GeneratorSet::standard(),
                                         const WitnessSearch& search = {});

/// Product of the six conjugates (gamma^eta)^(delta^eta beta^k), k = 0..5.
PlaneWord mirrored_epsilon(const GeneratorSet& gens = GeneratorSet::standard());

}  // namespace ordercert
