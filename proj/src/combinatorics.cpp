// SPDX-License-Identifier: Apache-2.0
//
// Exact code-size search: A_q(n,d) as a maximum clique problem on the graph
// whose vertices are the words of weight >= d (one codeword is fixed to the
// all-zeros word, which translation symmetry allows) and whose edges join
// pairs at Hamming distance >= d. The solver is a Tomita-style branch and
// bound with greedy-coloring bounds, warm-started by the lexicographic
// greedy code plus randomized restarts. Two symmetry reductions cut the
// root of the tree:
//   * the minimum-weight nonzero codeword can be assumed to be
//     1^w 0^(n-w) (coordinate permutations + per-coordinate symbol
//     relabelings act transitively on words of a given weight);
//   * for q = 2, a second codeword can additionally be assumed canonical
//     within the stabilizer S_w x S_(n-w) of the first two, leaving one
//     branch per (overlap, outside) support profile.
// For q = 2 and even d the search runs on (n-1, d-1) instead and the
// witness gains an overall parity symbol; distances d(x,y) >= d-1 round up
// to the next even number, so the extended code has distance >= d.

#include "codemeas/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "codemeas/rng.hpp"

namespace codemeas {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

mpz_class int_pow(int q, int n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    return r;
}

double mpz_log2(const mpz_class& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace

mpz_class ball_volume(int q, int n, int t) {
    require(q >= 2, "ball_volume: q must be >= 2");
    require(n >= 1, "ball_volume: n must be >= 1");
    require(t >= 0 && t <= n, "ball_volume: radius must satisfy 0 <= t <= n");
    mpz_class sum = 0;
    mpz_class binom = 1;   // C(n, j)
    mpz_class powqm1 = 1;  // (q-1)^j
    for (int j = 0; j <= t; ++j) {
        sum += binom * powqm1;
        binom = binom * (n - j) / (j + 1);
        powqm1 *= (q - 1);
    }
    return sum;
}

double ball_volume_log2(int q, int n, int t) { return mpz_log2(ball_volume(q, n, t)); }

std::pair<double, double> sphere_packing_bounds(int q, int n, int t) {
    require(q >= 2 && n >= 1 && t >= 0, "sphere_packing_bounds: invalid parameters");
    require(2 * t <= n, "sphere_packing_bounds: requires 2t <= n");
    const double log2qn = n * std::log2(static_cast<double>(q));
    const double lower = std::exp2(log2qn - ball_volume_log2(q, n, 2 * t));
    const double upper = std::exp2(log2qn - ball_volume_log2(q, n, t));
    return {lower, upper};
}

mpz_class hamming_bound(int q, int n, int t) {
    require(t >= 0 && t <= n, "hamming_bound: invalid radius");
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), int_pow(q, n).get_mpz_t(), ball_volume(q, n, t).get_mpz_t());
    return r;
}

mpz_class gilbert_varshamov_bound(int q, int n, int d) {
    require(d >= 1 && d <= n + 1, "gilbert_varshamov_bound: invalid distance");
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), int_pow(q, n).get_mpz_t(), ball_volume(q, n, std::min(d - 1, n)).get_mpz_t());
    return r;
}

double q_ary_entropy(int q, double x) {
    require(q >= 2, "q_ary_entropy: q must be >= 2");
    require(x >= 0.0 && x <= 1.0, "q_ary_entropy: argument outside [0,1]");
    const double lq = std::log(static_cast<double>(q));
    double h = 0.0;
    if (x > 0.0) h -= x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    h += x * std::log(static_cast<double>(q - 1)) / lq;
    return h;
}

int convention_distance(Convention c, int t) {
    require(t >= 0, "convention_distance: t must be >= 0");
    return c == Convention::strict ? 2 * t + 1 : 2 * t + 2;
}

const char* convention_name(Convention c) { return c == Convention::strict ? "strict" : "even"; }

// ---------------------------------------------------------------------------
// word enumeration and packed distances

namespace {

constexpr long kEnumCap = 1L << 22;  // largest q^n we will enumerate

long checked_pow(int q, int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) {
        r *= q;
        if (r > kEnumCap) return -1;
    }
    return r;
}

Word index_to_word(long idx, int q, int n) {
    Word w(n, 0);
    for (int j = 0; j < n; ++j) {
        w[j] = static_cast<int>(idx % q);
        idx /= q;
    }
    return w;
}

int word_weight_index(long idx, int q) {
    int wgt = 0;
    while (idx > 0) {
        wgt += (idx % q != 0) ? 1 : 0;
        idx /= q;
    }
    return wgt;
}

// nibble-packed words for q <= 16, n <= 16: distance via per-nibble compare
std::uint64_t pack_nibbles(long idx, int q, int n) {
    std::uint64_t p = 0;
    for (int j = 0; j < n; ++j) {
        p |= static_cast<std::uint64_t>(idx % q) << (4 * j);
        idx /= q;
    }
    return p;
}

int packed_distance(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ b;
    x |= x >> 1;
    x |= x >> 2;
    x &= 0x1111111111111111ULL;
    return static_cast<int>(__builtin_popcountll(x));
}

int index_distance(long a, long b, int q) {
    int d = 0;
    while (a > 0 || b > 0) {
        d += (a % q != b % q) ? 1 : 0;
        a /= q;
        b /= q;
    }
    return d;
}

// ---------------------------------------------------------------------------
// maximum clique branch and bound

struct CliqueSolver {
    int n_vertices = 0;
    int n_blocks = 0;
    std::vector<std::uint64_t> adjacency;  // n_vertices rows of n_blocks words
    std::vector<int> best, current;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
    long stop_at = 0;  // clique size that satisfies the caller; 0 = none
    bool aborted = false;
    bool satisfied = false;
    std::vector<std::vector<std::uint64_t>> child_sets;
    std::vector<std::vector<int>> order_stack, color_stack;

    void init(int n) {
        n_vertices = n;
        n_blocks = (n + 63) / 64;
        adjacency.assign(static_cast<std::size_t>(n) * n_blocks, 0);
        child_sets.assign(n + 2, std::vector<std::uint64_t>(n_blocks));
        order_stack.assign(n + 2, {});
        color_stack.assign(n + 2, {});
    }

    void add_edge(int u, int v) {
        adjacency[static_cast<std::size_t>(u) * n_blocks + v / 64] |= 1ULL << (v % 64);
        adjacency[static_cast<std::size_t>(v) * n_blocks + u / 64] |= 1ULL << (u % 64);
    }

    bool edge(int u, int v) const {
        return (adjacency[static_cast<std::size_t>(u) * n_blocks + v / 64] >> (v % 64)) & 1;
    }

    void note_best() {
        if (current.size() > best.size()) {
            best = current;
            if (stop_at > 0 && static_cast<long>(best.size()) >= stop_at) satisfied = true;
        }
    }

    void expand(std::vector<std::uint64_t>& candidates, int count, int depth) {
        if (++nodes > max_nodes) {
            aborted = true;
            return;
        }
        note_best();
        if (satisfied || count == 0) return;

        // greedy sequential coloring; class number bounds the clique extension
        auto& order = order_stack[depth];
        auto& colors = color_stack[depth];
        order.clear();
        colors.clear();
        std::vector<std::uint64_t> uncolored = candidates;
        std::vector<std::uint64_t> cls(n_blocks);
        int color = 0, remaining = count;
        while (remaining > 0) {
            ++color;
            cls = uncolored;
            for (int b = 0; b < n_blocks; ++b) {
                while (cls[b]) {
                    const int bit = __builtin_ctzll(cls[b]);
                    const int v = b * 64 + bit;
                    order.push_back(v);
                    colors.push_back(color);
                    uncolored[b] &= ~(1ULL << bit);
                    --remaining;
                    const std::uint64_t* row = &adjacency[static_cast<std::size_t>(v) * n_blocks];
                    for (int b2 = b; b2 < n_blocks; ++b2) cls[b2] &= ~row[b2];
                    cls[b] &= ~(1ULL << bit);
                }
            }
        }

        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + colors[i] <= static_cast<int>(best.size())) return;
            const int v = order[i];
            auto& child = child_sets[depth];
            int child_count = 0;
            const std::uint64_t* row = &adjacency[static_cast<std::size_t>(v) * n_blocks];
            for (int b = 0; b < n_blocks; ++b) {
                child[b] = candidates[b] & row[b];
                child_count += __builtin_popcountll(child[b]);
            }
            current.push_back(v);
            expand(child, child_count, depth + 1);
            current.pop_back();
            if (aborted || satisfied) return;
            candidates[v / 64] &= ~(1ULL << (v % 64));
        }
    }
};

struct CacheKey {
    int q, n, d;
    bool operator<(const CacheKey& o) const { return std::tie(q, n, d) < std::tie(o.q, o.n, o.d); }
};

std::map<CacheKey, SearchCertificate>& cache() {
    static std::map<CacheKey, SearchCertificate> c;
    return c;
}
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

void cache_merge(const CacheKey& key, const SearchCertificate& cert) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it == cache().end()) {
        cache()[key] = cert;
        return;
    }
    SearchCertificate& old = it->second;
    if (old.exact) return;
    if (cert.exact) {
        old = cert;
        return;
    }
    if (cert.lower > old.lower) {
        old.lower = cert.lower;
        old.witness = cert.witness;
    }
    old.upper = std::min(old.upper, cert.upper);
    if (old.lower == old.upper) old.exact = true;
}

std::optional<SearchCertificate> cache_lookup(const CacheKey& key, std::optional<long> target) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it == cache().end()) return std::nullopt;
    if (it->second.exact) return it->second;
    if (target && it->second.lower >= *target) return it->second;
    return std::nullopt;
}

long clamp_to_long(const mpz_class& v) {
    if (!v.fits_slong_p()) return std::numeric_limits<long>::max();
    return v.get_si();
}

ClassicalCode greedy_code_impl(int q, int n, int d, long max_words) {
    const long total = checked_pow(q, n);
    if (total < 0) {
        throw std::invalid_argument("greedy_code: q^n too large to enumerate");
    }
    const bool packed = (q <= 16 && n <= 16);
    std::vector<std::uint64_t> kept_packed;
    std::vector<long> kept_idx;
    for (long idx = 0; idx < total; ++idx) {
        bool ok = true;
        if (packed) {
            const std::uint64_t p = pack_nibbles(idx, q, n);
            for (std::uint64_t kp : kept_packed) {
                if (packed_distance(p, kp) < d) {
                    ok = false;
                    break;
                }
            }
            if (ok) kept_packed.push_back(p);
        } else {
            for (long kp : kept_idx) {
                if (index_distance(idx, kp, q) < d) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            kept_idx.push_back(idx);
            if (max_words > 0 && static_cast<long>(kept_idx.size()) >= max_words) break;
        }
    }
    std::vector<Word> words;
    words.reserve(kept_idx.size());
    for (long idx : kept_idx) words.push_back(index_to_word(idx, q, n));
    return ClassicalCode(q, std::move(words));
}

SearchCertificate search_impl(int q, int n, int d, const SearchBudget& budget, std::optional<long> target) {
    SearchCertificate cert;
    const mpz_class hb = hamming_bound(q, n, (d - 1) / 2);
    const long upper_cap = clamp_to_long(hb);

    const long total = checked_pow(q, n);
    if (total < 0) {
        // beyond enumeration scale: report the counting bounds only
        cert.lower = clamp_to_long(gilbert_varshamov_bound(q, n, d));
        cert.upper = upper_cap;
        cert.exact = (cert.lower == cert.upper);
        return cert;
    }

    // vertices: words of weight >= d (the all-zeros codeword is implicit)
    std::vector<long> verts;
    for (long idx = 1; idx < total; ++idx) {
        if (word_weight_index(idx, q) >= d) verts.push_back(idx);
    }
    const int N = static_cast<int>(verts.size());
    if (N == 0) {
        cert.exact = true;
        cert.lower = cert.upper = 1;
        cert.witness = ClassicalCode(q, {Word(n, 0)});
        return cert;
    }
    if (static_cast<std::size_t>(N) > budget.max_vertices) {
        ClassicalCode greedy = greedy_code_impl(q, n, d, target ? *target : 0);
        cert.lower = greedy.size();
        cert.upper = upper_cap;
        cert.exact = (cert.lower == cert.upper);
        cert.witness = std::move(greedy);
        return cert;
    }

    const bool packed = (q <= 16 && n <= 16);
    std::vector<std::uint64_t> packed_words(N);
    std::vector<Word> digit_words;
    if (packed) {
        for (int i = 0; i < N; ++i) packed_words[i] = pack_nibbles(verts[i], q, n);
    } else {
        digit_words.reserve(N);
        for (int i = 0; i < N; ++i) digit_words.push_back(index_to_word(verts[i], q, n));
    }
    auto vdist = [&](int i, int j) {
        return packed ? packed_distance(packed_words[i], packed_words[j])
                      : hamming_distance(digit_words[i], digit_words[j]);
    };

    // order vertices by degree (descending) for coloring quality
    std::vector<int> degree(N, 0);
    std::vector<std::vector<int>> neighbor_lists(N);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            if (vdist(i, j) >= d) {
                ++degree[i];
                ++degree[j];
                neighbor_lists[i].push_back(j);
            }
        }
    }
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return verts[a] < verts[b];
    });
    std::vector<int> pos(N);
    for (int i = 0; i < N; ++i) pos[perm[i]] = i;

    CliqueSolver solver;
    solver.init(N);
    solver.max_nodes = budget.max_nodes;
    if (target) solver.stop_at = *target - 1;  // clique size excludes the zero word
    for (int i = 0; i < N; ++i) {
        for (int j : neighbor_lists[i]) solver.add_edge(pos[i], pos[j]);
    }

    std::vector<int> weight_of(N);
    std::vector<long> word_of(N);
    for (int i = 0; i < N; ++i) {
        word_of[pos[i]] = verts[i];
        weight_of[pos[i]] = word_weight_index(verts[i], q);
    }

    // warm start: lexicographic greedy, then randomized restarts
    {
        ClassicalCode greedy = greedy_code_impl(q, n, d, 0);
        std::map<long, int> id_of;
        for (int i = 0; i < N; ++i) id_of[word_of[i]] = i;
        std::vector<int> seed_clique;
        for (const Word& w : greedy.codewords()) {
            long idx = 0;
            for (int j = n - 1; j >= 0; --j) idx = idx * q + w[j];
            auto it = id_of.find(idx);
            if (it != id_of.end()) seed_clique.push_back(it->second);
        }
        solver.best = seed_clique;

        Prng prng(0x5eedULL ^ (static_cast<std::uint64_t>(q) << 40) ^ (static_cast<std::uint64_t>(n) << 20) ^
                  static_cast<std::uint64_t>(d));
        std::vector<int> shuffle(N);
        std::iota(shuffle.begin(), shuffle.end(), 0);
        for (int round = 0; round < budget.multistart_rounds; ++round) {
            for (int i = N - 1; i > 0; --i) {
                const int j = static_cast<int>(prng.uniform_below(static_cast<std::uint64_t>(i) + 1));
                std::swap(shuffle[i], shuffle[j]);
            }
            std::vector<int> clique;
            for (int v : shuffle) {
                bool ok = true;
                for (int u : clique) {
                    if (!solver.edge(v, u)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) clique.push_back(v);
            }
            if (clique.size() > solver.best.size()) solver.best = clique;
        }
        solver.note_best();  // picks up stop_at satisfaction from warm starts
        if (solver.satisfied) {
            cert.lower = static_cast<long>(solver.best.size()) + 1;
            cert.upper = upper_cap;
            cert.exact = (cert.lower == cert.upper);
            cert.nodes_used = 0;
            std::vector<Word> words{Word(n, 0)};
            for (int v : solver.best) words.push_back(index_to_word(word_of[v], q, n));
            std::sort(words.begin() + 1, words.end());
            cert.witness = ClassicalCode(q, std::move(words));
            return cert;
        }
    }

    // canonical root branching on the minimum-weight codeword 1^w 0^(n-w)
    std::vector<std::uint64_t> root_candidates(solver.n_blocks);
    for (int w = n; w >= d && !solver.aborted && !solver.satisfied; --w) {
        // index of the word with symbol 1 at positions 0..w-1 (position 0 least significant)
        long canon = 0;
        long place = 1;
        for (int j = 0; j < w; ++j) {
            canon += place;
            place *= q;
        }
        int canon_id = -1;
        for (int i = 0; i < N; ++i) {
            if (word_of[i] == canon) {
                canon_id = i;
                break;
            }
        }
        if (canon_id < 0) continue;

        auto run_branch = [&](const std::vector<int>& fixed) {
            std::fill(root_candidates.begin(), root_candidates.end(), 0ULL);
            int count = 0;
            for (int i = 0; i < N; ++i) {
                if (weight_of[i] < w) continue;
                bool ok = true;
                for (int f : fixed) {
                    if (i == f || !solver.edge(i, f)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                root_candidates[i / 64] |= 1ULL << (i % 64);
                ++count;
            }
            solver.current = fixed;
            solver.expand(root_candidates, count, 0);
            solver.current.clear();
        };

        if (q == 2) {
            // second-level orbits under S_w x S_(n-w): support profile (a, b)
            for (int a = 0; a <= w && !solver.aborted && !solver.satisfied; ++a) {
                for (int b = 0; b <= n - w; ++b) {
                    if (a + b < w) continue;            // canon stays minimum weight
                    if (a + b < d) continue;            // distance to the zero word
                    if ((w - a) + b < d) continue;      // distance to canon
                    long u = 0;
                    long pl = 1;
                    for (int j = 0; j < n; ++j) {
                        const bool one = (j < a) || (j >= w && j < w + b);
                        if (one) u += pl;
                        pl *= q;
                    }
                    if (u == canon) continue;
                    int u_id = -1;
                    for (int i = 0; i < N; ++i) {
                        if (word_of[i] == u) {
                            u_id = i;
                            break;
                        }
                    }
                    if (u_id < 0) continue;
                    run_branch({canon_id, u_id});
                    if (solver.aborted || solver.satisfied) break;
                }
            }
        } else {
            run_branch({canon_id});
        }
    }

    cert.nodes_used = solver.nodes;
    cert.lower = static_cast<long>(solver.best.size()) + 1;
    if (solver.aborted || solver.satisfied) {
        cert.upper = upper_cap;
        cert.exact = (cert.lower == cert.upper);
    } else {
        cert.upper = cert.lower;
        cert.exact = true;
    }
    std::vector<Word> words{Word(n, 0)};
    for (int v : solver.best) words.push_back(index_to_word(word_of[v], q, n));
    std::sort(words.begin() + 1, words.end());
    cert.witness = ClassicalCode(q, std::move(words));
    return cert;
}

Word with_parity_symbol(const Word& w) {
    Word out = w;
    out.push_back(hamming_weight(w) % 2);
    return out;
}

}  // namespace

ClassicalCode greedy_code(int q, int n, int d) {
    require(q >= 2 && n >= 1 && d >= 1, "greedy_code: invalid parameters");
    return greedy_code_impl(q, n, d, 0);
}

SearchCertificate max_code_size(int q, int n, int d, const SearchBudget& budget, std::optional<long> target) {
    if (q < 2 || n < 1) throw std::invalid_argument("max_code_size: require q >= 2, n >= 1");
    if (d < 1) throw std::invalid_argument("max_code_size: require d >= 1");

    if (d > n) {
        SearchCertificate cert;
        cert.exact = true;
        cert.lower = cert.upper = 1;
        cert.witness = ClassicalCode(q, {Word(n, 0)});
        return cert;
    }
    if (d == 1) {
        SearchCertificate cert;
        const mpz_class total = int_pow(q, n);
        cert.lower = cert.upper = clamp_to_long(total);
        cert.exact = total.fits_slong_p();
        if (checked_pow(q, n) > 0) cert.witness = greedy_code_impl(q, n, 1, 0);
        return cert;
    }

    const CacheKey key{q, n, d};
    if (auto hit = cache_lookup(key, target)) return *hit;

    SearchCertificate cert;
    if (q == 2 && d % 2 == 0) {
        // binary even-distance reduction: search (n-1, d-1), extend by parity
        SearchCertificate inner = max_code_size(2, n - 1, d - 1, budget, target);
        cert = inner;
        if (inner.witness) {
            std::vector<Word> extended;
            extended.reserve(inner.witness->codewords().size());
            for (const Word& w : inner.witness->codewords()) extended.push_back(with_parity_symbol(w));
            cert.witness = ClassicalCode(2, std::move(extended));
        }
    } else {
        cert = search_impl(q, n, d, budget, target);
    }
    cache_merge(key, cert);
    return cert;
}

LengthResult min_length(int q, long M, int d, const SearchBudget& budget) {
    if (q < 2) throw std::invalid_argument("min_length: require q >= 2");
    if (M < 2) throw std::invalid_argument("min_length: require M >= 2");
    if (d < 1) throw std::invalid_argument("min_length: require d >= 1");

    LengthResult out;
    int first_uncertain = 0;

    int n = 1;
    {
        mpz_class cap = q;
        while (cap < M) {
            cap *= q;
            ++n;
        }
    }
    const int n_limit = n + 512;
    for (; n <= n_limit; ++n) {
        if (d > n) continue;  // only the single-codeword code fits
        if (hamming_bound(q, n, (d - 1) / 2) < M) continue;  // certified infeasible

        std::optional<ClassicalCode> witness;
        bool feasible = false;
        if (checked_pow(q, n) > 0) {
            ClassicalCode greedy = greedy_code_impl(q, n, d, M);
            if (greedy.size() >= M) {
                feasible = true;
                witness = std::move(greedy);
            }
        } else if (gilbert_varshamov_bound(q, n, d) >= M) {
            feasible = true;  // GV guarantees existence; no explicit code built
        }
        if (!feasible) {
            SearchCertificate cert = max_code_size(q, n, d, budget, M);
            if (cert.lower >= M) {
                feasible = true;
                witness = cert.witness;
            } else if (!cert.exact) {
                if (first_uncertain == 0) first_uncertain = n;
                continue;
            } else {
                continue;  // exact A < M: certified infeasible
            }
        }
        out.n_upper = n;
        out.n_lower = (first_uncertain == 0) ? n : first_uncertain;
        out.exact = (first_uncertain == 0);
        out.witness_available = witness.has_value();
        out.witness = std::move(witness);
        return out;
    }
    throw std::runtime_error("min_length: no feasible length found below the scan limit");
}

std::pair<double, double> asymptotic_length_bounds(int q, double M, double epsilon_frac) {
    require(q >= 2, "asymptotic_length_bounds: q must be >= 2");
    require(M >= 2.0, "asymptotic_length_bounds: M must be >= 2");
    require(epsilon_frac >= 0.0, "asymptotic_length_bounds: negative error fraction");
    require(2.0 * epsilon_frac < static_cast<double>(q - 1) / q,
            "asymptotic_length_bounds: requires 2*epsilon < (q-1)/q");
    const double logq_m = std::log(M) / std::log(static_cast<double>(q));
    const double lower = logq_m / (1.0 - q_ary_entropy(q, epsilon_frac));
    const double upper = logq_m / (1.0 - q_ary_entropy(q, 2.0 * epsilon_frac));
    return {lower, upper};
}

}  // namespace codemeas
