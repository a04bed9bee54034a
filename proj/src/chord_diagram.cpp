#include "wslab/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wslab {

namespace {

/* Relabel so that labels are 1..n in order of first appearance. */
std::vector<int> normalize_word(const std::vector<int>& raw) {
    std::map<int, int> relabel;
    std::vector<int> out;
    out.reserve(raw.size());
    for (int v : raw) {
        auto [it, fresh] = relabel.emplace(v, static_cast<int>(relabel.size()) + 1);
        out.push_back(it->second);
    }
    return out;
}

void validate_word(const std::vector<int>& w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("chord diagram: odd number of endpoints");
    const int n = static_cast<int>(w.size() / 2);
    std::vector<int> count(n + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw std::invalid_argument("chord diagram: label out of range after normalization");
        ++count[v];
    }
    for (int c = 1; c <= n; ++c)
        if (count[c] != 2)
            throw std::invalid_argument("chord diagram: each chord needs exactly two endpoints");
}

}  // namespace

const char* to_string(SurgeryKind k) {
    switch (k) {
        case SurgeryKind::cross: return "cross";
        case SurgeryKind::parallel: return "parallel";
        case SurgeryKind::lr: return "lr";
        case SurgeryKind::rl: return "rl";
        case SurgeryKind::ll: return "ll";
        case SurgeryKind::rr: return "rr";
    }
    return "?";
}

ChordDiagram::ChordDiagram(const std::vector<int>& raw_word)
    : word_(normalize_word(raw_word)) {
    validate_word(word_);
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
    std::vector<int> raw;
    const bool has_space =
        std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
    if (has_space) {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                raw.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("chord diagram: bad token '" + tok + "'");
            }
        }
    } else {
        for (char ch : text) {
            if (ch >= 'a' && ch <= 'z')
                raw.push_back(ch - 'a' + 1);
            else if (ch >= '0' && ch <= '9')
                raw.push_back(ch - '0');
            else
                throw std::invalid_argument(std::string("chord diagram: bad character '") + ch + "'");
        }
    }
    return ChordDiagram(raw);
}

std::string ChordDiagram::str() const {
    std::string out;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(word_[i]);
    }
    return out;
}

ChordDiagram ChordDiagram::rotated(int k) const {
    const int N = static_cast<int>(word_.size());
    if (N == 0) return *this;
    k = ((k % N) + N) % N;
    std::vector<int> w(word_.begin() + k, word_.end());
    w.insert(w.end(), word_.begin(), word_.begin() + k);
    return ChordDiagram(w);
}

ChordDiagram ChordDiagram::canonical() const {
    const int N = static_cast<int>(word_.size());
    if (N == 0) return *this;
    std::vector<int> best = word_;  // already normalized
    std::vector<int> rotated(N);
    for (int r = 1; r < N; ++r) {
        for (int i = 0; i < N; ++i) rotated[i] = word_[(i + r) % N];
        std::vector<int> candidate = normalize_word(rotated);
        if (candidate < best) best = std::move(candidate);
    }
    ChordDiagram out;
    out.word_ = std::move(best);
    return out;
}

std::array<int, 2> ChordDiagram::endpoints(int chord) const {
    std::array<int, 2> pos{-1, -1};
    for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
        if (word_[i] != chord) continue;
        (pos[0] < 0 ? pos[0] : pos[1]) = i;
    }
    if (pos[1] < 0)
        throw std::invalid_argument("chord diagram: unknown chord " + std::to_string(chord));
    return pos;
}

std::vector<int> ChordDiagram::intersecting(int chord) const {
    auto [a1, a2] = endpoints(chord);
    std::vector<int> out;
    for (int b = 1; b <= order(); ++b) {
        if (b == chord) continue;
        auto [b1, b2] = endpoints(b);
        const bool in1 = a1 < b1 && b1 < a2;
        const bool in2 = a1 < b2 && b2 < a2;
        if (in1 != in2) out.push_back(b);
    }
    return out;
}

int ChordDiagram::crossing_pairs() const {
    int count = 0;
    for (int a = 1; a <= order(); ++a)
        count += static_cast<int>(intersecting(a).size());
    return count / 2;
}

bool ChordDiagram::has_isolated_chord() const {
    const int N = static_cast<int>(word_.size());
    for (int i = 0; i < N; ++i)
        if (word_[i] == word_[(i + 1) % N]) return true;
    return false;
}

ChordDiagram ChordDiagram::restricted_to(const std::set<int>& chords) const {
    std::vector<int> w;
    for (int v : word_)
        if (chords.count(v)) w.push_back(v);
    return ChordDiagram(w).canonical();
}

ChordDiagram ChordDiagram::without(const std::set<int>& chords) const {
    for (int c : chords) (void)endpoints(c);  // reject unknown labels
    std::set<int> keep;
    for (int c = 1; c <= order(); ++c)
        if (!chords.count(c)) keep.insert(c);
    return restricted_to(keep);
}

ChordDiagram ChordDiagram::surgery(int a, int b_i, int b_j, SurgeryKind kind,
                                   ArcConvention conv) const {
    if (b_i == b_j) throw std::invalid_argument("surgery: b_i and b_j must differ");
    auto [a1, a2] = endpoints(a);
    auto in_right_arc = [&, a1 = a1, a2 = a2](int pos) {
        const bool between = a1 < pos && pos < a2;
        return conv == ArcConvention::first_to_second ? between : !between;
    };
    /* left/right endpoint of a chord crossing a */
    auto split = [&](int b) -> std::array<int, 2> {  // {left, right}
        auto [p1, p2] = endpoints(b);
        const bool r1 = in_right_arc(p1), r2 = in_right_arc(p2);
        if (r1 == r2)
            throw std::invalid_argument("surgery: chord " + std::to_string(b) +
                                        " does not cross chord " + std::to_string(a));
        return r1 ? std::array<int, 2>{p2, p1} : std::array<int, 2>{p1, p2};
    };
    auto [li, ri] = split(b_i);
    auto [lj, rj] = split(b_j);

    std::vector<std::array<int, 2>> new_chords;
    std::set<int> dropped{a1, a2};
    switch (kind) {
        case SurgeryKind::cross:
            new_chords = {{li, rj}, {lj, ri}};
            break;
        case SurgeryKind::parallel:
            new_chords = {{li, lj}, {ri, rj}};
            break;
        case SurgeryKind::lr:
            new_chords = {{li, rj}};
            dropped.insert(ri);
            dropped.insert(lj);
            break;
        case SurgeryKind::rl:
            new_chords = {{ri, lj}};
            dropped.insert(li);
            dropped.insert(rj);
            break;
        case SurgeryKind::ll:
            new_chords = {{li, lj}};
            dropped.insert(ri);
            dropped.insert(rj);
            break;
        case SurgeryKind::rr:
            new_chords = {{ri, rj}};
            dropped.insert(li);
            dropped.insert(lj);
            break;
    }

    /* Reassemble: position -> synthetic chord id, then normalize. */
    std::map<int, int> chord_at;
    int next_id = 1;
    for (int b = 1; b <= order(); ++b) {
        if (b == a || b == b_i || b == b_j) continue;
        auto [p1, p2] = endpoints(b);
        chord_at[p1] = chord_at[p2] = next_id++;
    }
    for (const auto& [p, q] : new_chords) chord_at[p] = chord_at[q] = next_id++;

    std::vector<int> w;
    for (int pos = 0; pos < static_cast<int>(word_.size()); ++pos) {
        if (dropped.count(pos)) continue;
        w.push_back(chord_at.at(pos));
    }
    return ChordDiagram(w).canonical();
}

ChordDiagram ChordDiagram::connect(const ChordDiagram& other) const {
    std::vector<int> w = word_;
    const int shift = order();
    for (int v : other.word_) w.push_back(v + shift);
    return ChordDiagram(w).canonical();
}

ChordDiagram theta() {
    return ChordDiagram({1, 1});
}

ChordDiagram with_isolated_chords(const ChordDiagram& d, int k) {
    std::vector<int> w;
    for (int i = 1; i <= k; ++i) {
        w.push_back(i);
        w.push_back(i);
    }
    for (int v : d.word()) w.push_back(v + k);
    return ChordDiagram(w).canonical();
}

std::vector<SubsetSplit> subsets(const ChordDiagram& d) {
    const int n = d.order();
    std::vector<SubsetSplit> out;
    out.reserve(size_t{1} << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> in, outside;
        for (int c = 1; c <= n; ++c)
            (mask & (1u << (c - 1)) ? in : outside).insert(c);
        out.push_back({d.restricted_to(in), d.restricted_to(outside),
                       static_cast<int>(in.size())});
    }
    return out;
}

int max_order_cap() {
    if (const char* env = std::getenv("WS_LAB_MAX_ORDER_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 8;
}

std::vector<ChordDiagram> enumerate_diagrams(int n) {
    if (n < 0) throw std::invalid_argument("enumerate: negative order");
    if (n > max_order_cap())
        throw std::runtime_error("enumerate: order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(max_order_cap()) +
                                 " (set WS_LAB_MAX_ORDER_CAP to raise)");
    std::set<ChordDiagram> seen;
    const int N = 2 * n;
    std::vector<int> word(N, 0);
    std::function<void(int)> place = [&](int next_chord) {
        int first = -1;
        for (int i = 0; i < N; ++i)
            if (word[i] == 0) {
                first = i;
                break;
            }
        if (first < 0) {
            seen.insert(ChordDiagram(word).canonical());
            return;
        }
        for (int j = first + 1; j < N; ++j) {
            if (word[j] != 0) continue;
            word[first] = word[j] = next_chord;
            place(next_chord + 1);
            word[first] = word[j] = 0;
        }
    };
    place(1);
    return {seen.begin(), seen.end()};
}

std::vector<FourTermQuadruple> four_term_quadruples(int n) {
    std::vector<FourTermQuadruple> out;
    if (n < 2) return out;
    std::set<std::string> seen;
    for (const ChordDiagram& d : enumerate_diagrams(n)) {
        const auto& w = d.word();
        const int N = static_cast<int>(w.size());
        for (int q = 0; q < N; ++q) {           // moving endpoint of chord b
            const int b = w[q];
            for (int delta : {1, N - 1}) {      // neighbour on either side is chord a
                const int a = w[(q + delta) % N];
                if (a == b) continue;

                std::vector<int> reduced;
                reduced.reserve(N - 1);
                for (int i = 0; i < N; ++i)
                    if (i != q) reduced.push_back(w[i]);
                std::array<int, 2> p{-1, -1};
                for (int i = 0; i < N - 1; ++i)
                    if (reduced[i] == a) (p[0] < 0 ? p[0] : p[1]) = i;

                /* b's endpoint just after / just before each endpoint of a */
                const std::array<int, 4> slots{p[0] + 1, p[0], p[1] + 1, p[1]};
                FourTermQuadruple quad;
                for (int k = 0; k < 4; ++k) {
                    std::vector<int> v = reduced;
                    v.insert(v.begin() + slots[k], b);
                    quad.diagram[k] = ChordDiagram(v).canonical();
                }

                /* dedup as an unordered signed multiset, up to global sign */
                std::vector<std::string> plus, minus;
                for (int k = 0; k < 4; ++k)
                    (FourTermQuadruple::sign[k] > 0 ? plus : minus)
                        .push_back(quad.diagram[k].str());
                std::sort(plus.begin(), plus.end());
                std::sort(minus.begin(), minus.end());
                auto join = [](const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
                    std::string s;
                    for (const auto& x : a) s += "+" + x + ";";
                    for (const auto& x : b) s += "-" + x + ";";
                    return s;
                };
                std::string key = std::min(join(plus, minus), join(minus, plus));
                if (seen.insert(std::move(key)).second) out.push_back(std::move(quad));
            }
        }
    }
    return out;
}

}  // namespace wslab
