#pragma once

#include <array>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace wslab {

/* Which of the two arcs cut out by a chord counts as its "right" side.
 * Default: the arc traversed counterclockwise from the chord's first
 * word-occurrence to its second. The flipped convention exists only to test
 * that every quantity the recursions consume is convention-independent. */
enum class ArcConvention { first_to_second, second_to_first };

/* The six chord replacements entering the recursion formulas. cross/parallel
 * replace the pair (b_i, b_j) by two chords (order n-1); the other four keep a
 * single chord and drop the two unused endpoints (order n-2). */
enum class SurgeryKind { cross, parallel, lr, rl, ll, rr };

const char* to_string(SurgeryKind k);

/* A chord diagram: an oriented circle with n chords, encoded as the cyclic
 * word of chord labels read counterclockwise from a basepoint. Stored words
 * are always label-normalized (labels 1..n in order of first appearance);
 * canonical() additionally minimizes over basepoint rotations.
 *
 * Immutable after construction; safe to share across threads. */
class ChordDiagram {
  public:
    ChordDiagram() = default;  // the empty diagram

    /* From a raw word (each label exactly twice); labels get normalized. */
    explicit ChordDiagram(const std::vector<int>& raw_word);

    /* Accepts the space-separated decimal form ("1 2 1 2") and the compact
     * one-character-per-endpoint form ("abab" or "1212"). Throws
     * std::invalid_argument on malformed input. */
    static ChordDiagram parse(const std::string& text);

    int order() const { return static_cast<int>(word_.size() / 2); }
    const std::vector<int>& word() const { return word_; }
    /* Space-separated decimal word; "" for the empty diagram. */
    std::string str() const;

    /* Lexicographically least label-normalized word over all rotations. */
    ChordDiagram canonical() const;
    /* Word rotated left by k positions (re-normalized). */
    ChordDiagram rotated(int k) const;

    /* Word positions (first, second) of a chord; throws on unknown label. */
    std::array<int, 2> endpoints(int chord) const;
    /* Chords crossing the given one, ascending. */
    std::vector<int> intersecting(int chord) const;
    /* Number of crossing chord pairs. */
    int crossing_pairs() const;
    /* True iff some chord's endpoints are adjacent on the circle. */
    bool has_isolated_chord() const;

    /* Sub-diagram on a subset of chords, canonicalized. */
    ChordDiagram restricted_to(const std::set<int>& chords) const;
    /* Diagram with the given chords removed, canonicalized. */
    ChordDiagram without(const std::set<int>& chords) const;

    /* Remove a, b_i, b_j and add replacement chords per `kind` (see
     * SurgeryKind). b_i and b_j must both cross a. Canonicalized. */
    ChordDiagram surgery(int a, int b_i, int b_j, SurgeryKind kind,
                         ArcConvention conv = ArcConvention::first_to_second) const;

    /* Connected sum: concatenation of the words, canonicalized. */
    ChordDiagram connect(const ChordDiagram& other) const;

    bool operator==(const ChordDiagram& o) const = default;
    std::strong_ordering operator<=>(const ChordDiagram& o) const = default;

  private:
    std::vector<int> word_;
};

/* The one-chord diagram. */
ChordDiagram theta();

/* k isolated chords joined in front of D (connected-sum powers of theta). */
ChordDiagram with_isolated_chords(const ChordDiagram& d, int k);

/* One entry of the subset iteration behind products and deframing. */
struct SubsetSplit {
    ChordDiagram part;  // induced sub-diagram E
    ChordDiagram rest;  // induced complement D \ E
    int size = 0;       // |E|
};

/* All 2^n chord-subset splittings of D. */
std::vector<SubsetSplit> subsets(const ChordDiagram& d);

/* Four diagrams whose alternating sum every weight system must kill: the four
 * placements of one chord endpoint next to the two endpoints of another
 * chord. Signs are +, -, +, -. */
struct FourTermQuadruple {
    std::array<ChordDiagram, 4> diagram;
    static constexpr std::array<int, 4> sign{1, -1, 1, -1};
};

/* Resource guard: the largest order enumerate/table/verify will touch.
 * Defaults to 8; the WS_LAB_MAX_ORDER_CAP environment variable overrides. */
int max_order_cap();

/* All canonical diagrams of order n, sorted. Throws std::runtime_error when n
 * exceeds max_order_cap(). */
std::vector<ChordDiagram> enumerate_diagrams(int n);

/* Every four-term quadruple arising from canonical diagrams of order n,
 * deduplicated as unordered signed multisets (n < 2 gives an empty list). */
std::vector<FourTermQuadruple> four_term_quadruples(int n);

}  // namespace wslab
