#include "tspread/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "tspread/bigint.hpp"

namespace tspread {

namespace {

constexpr std::size_t kMaxMatrixCells = 8u << 20;  // elimination size guard

int read_cap() {
    int cap = 20;
    if (const char* env = std::getenv("TSPREAD_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) cap = static_cast<int>(v);
    }
    return std::min(cap, 20);
}

struct FacetKey {
    std::vector<Mask> facets;  // canonical: labels compressed, sorted
    bool operator==(const FacetKey& o) const { return facets == o.facets; }
};

struct FacetKeyHash {
    std::size_t operator()(const FacetKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (Mask m : k.facets) {
            h ^= m;
            h *= 1099511628211ull;
        }
        return h;
    }
};

FacetKey canonical_key(const std::vector<Mask>& facets) {
    Mask used = 0;
    for (Mask f : facets) used |= f;
    std::vector<int> newpos(kMaxVars, 0);
    int next = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if ((used >> i) & 1u) newpos[i] = next++;
    FacetKey key;
    key.facets.reserve(facets.size());
    for (Mask f : facets) {
        Mask c = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if ((f >> i) & 1u) c |= Mask{1} << newpos[i];
        key.facets.push_back(c);
    }
    std::sort(key.facets.begin(), key.facets.end());
    return key;
}

std::mutex g_cache_mutex;
std::unordered_map<FacetKey, HomologyProfile, FacetKeyHash> g_homology_cache;
std::unordered_map<FacetKey, bool, FacetKeyHash> g_cm_cache;

// --- exact rank of an integer matrix (fraction-free elimination) ---

std::optional<int> rank_int64(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (!rows) return 0;
    const std::size_t cols = m[0].size();
    long long prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // smallest-magnitude pivot in the remaining block of this column run
        std::size_t pr = rows, pc = cols;
        long long best = 0;
        for (std::size_t j = c; j < cols && pr == rows; ++j) {
            for (std::size_t i = r; i < rows; ++i) {
                long long v = m[i][j];
                if (v && (best == 0 || std::llabs(v) < std::llabs(best))) {
                    best = v;
                    pr = i;
                    pc = j;
                    if (v == 1 || v == -1) break;
                }
            }
            if (pr != rows) break;  // leftmost column with a nonzero entry
        }
        if (pr == rows) break;
        std::swap(m[pr], m[r]);
        for (auto& row : m) std::swap(row[pc], row[c]);
        const long long piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const long long mic = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 t = static_cast<__int128>(m[i][j]) * piv -
                             static_cast<__int128>(mic) * m[r][j];
                t /= prev;  // exact by the Sylvester identity
                if (t > std::numeric_limits<long long>::max() ||
                    t < std::numeric_limits<long long>::min())
                    return std::nullopt;
                m[i][j] = static_cast<long long>(t);
            }
            m[i][c] = 0;
        }
        prev = piv;
        ++r;
        c = r - 1;  // next pass continues from the next column
    }
    return static_cast<int>(r);
}

int rank_bigint(const std::vector<std::vector<long long>>& src) {
    const std::size_t rows = src.size();
    if (!rows) return 0;
    const std::size_t cols = src[0].size();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = BigInt(src[i][j]);
    BigInt prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t j = c; j < cols && pr == rows; ++j)
            for (std::size_t i = r; i < rows; ++i)
                if (!m[i][j].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        std::swap(m[pr], m[r]);
        for (auto& row : m) std::swap(row[pc], row[c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]).div_exact(prev);
            m[i][c] = BigInt(0);
        }
        prev = m[r][c];
        ++r;
        c = r - 1;
    }
    return static_cast<int>(r);
}

int matrix_rank(std::vector<std::vector<long long>> m) {
    if (!m.empty() && m.size() * m[0].size() > kMaxMatrixCells)
        throw std::length_error("oracle: boundary matrix too large");
    if (auto r = rank_int64(m)) return *r;
    return rank_bigint(m);
}

// faces grouped by dimension; faces[k] holds the k-dimensional ones
std::vector<std::vector<Mask>> closure_by_dim(const std::vector<Mask>& facets) {
    std::vector<Mask> all;
    // downward closure by submask walk per facet
    std::vector<char> mark;
    Mask used = 0;
    for (Mask f : facets) used |= f;
    const std::size_t span = static_cast<std::size_t>(1)
                             << (used ? max_index(used) : 0);
    mark.assign(span, 0);
    for (Mask f : facets) {
        for (Mask s = f;; s = (s - 1) & f) {
            if (!mark[s]) {
                mark[s] = 1;
                all.push_back(s);
            }
            if (!s) break;
        }
    }
    int dim = -1;
    for (Mask f : facets) dim = std::max(dim, degree(f) - 1);
    std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(dim + 2));
    for (Mask s : all) by_dim[static_cast<std::size_t>(degree(s))].push_back(s);
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    return by_dim;  // by_dim[k] = faces with k vertices (dimension k-1)
}

HomologyProfile homology_of_facets(const std::vector<Mask>& facets_in) {
    const FacetKey key = canonical_key(facets_in);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_homology_cache.find(key);
        if (it != g_homology_cache.end()) return it->second;
    }

    const std::vector<Mask>& facets = key.facets;
    HomologyProfile prof;
    if (facets.empty()) {
        prof.betti = {};  // void complex
    } else if (facets.size() == 1 && facets[0] == 0) {
        prof.betti = {1};  // just the empty face
    } else {
        // cones are acyclic: some vertex lies in every facet
        Mask common = ~Mask{0};
        for (Mask f : facets) common &= f;
        int dim = -1;
        for (Mask f : facets) dim = std::max(dim, degree(f) - 1);
        if (common) {
            prof.betti.assign(static_cast<std::size_t>(dim + 2), 0);
        } else {
            auto by_size = closure_by_dim(facets);  // by_size[k]: k vertices
            std::vector<int> rank_d(by_size.size() + 1, 0);
            // del_0 maps vertices onto the empty face
            rank_d[1] = by_size.size() > 1 && !by_size[1].empty() ? 1 : 0;
            for (std::size_t k = 2; k < by_size.size(); ++k) {
                const auto& rows_faces = by_size[k - 1];
                const auto& cols_faces = by_size[k];
                if (rows_faces.empty() || cols_faces.empty()) continue;
                std::vector<std::vector<long long>> mat(
                    rows_faces.size(), std::vector<long long>(cols_faces.size(), 0));
                for (std::size_t cidx = 0; cidx < cols_faces.size(); ++cidx) {
                    Mask f = cols_faces[cidx];
                    int pos = 0;
                    for (int i : indices_of(f)) {
                        Mask sub = without_index(f, i);
                        auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                        mat[static_cast<std::size_t>(it - rows_faces.begin())][cidx] =
                            (pos % 2 == 0) ? 1 : -1;
                        ++pos;
                    }
                }
                rank_d[k] = matrix_rank(std::move(mat));
            }
            prof.betti.assign(static_cast<std::size_t>(dim + 2), 0);
            for (int kdim = -1; kdim <= dim; ++kdim) {
                const std::size_t k = static_cast<std::size_t>(kdim + 1);
                const long long faces_k =
                    k < by_size.size() ? static_cast<long long>(by_size[k].size()) : 0;
                const long long rk = k < rank_d.size() ? rank_d[k] : 0;
                const long long rk1 = k + 1 < rank_d.size() ? rank_d[k + 1] : 0;
                prof.betti[k] = faces_k - rk - rk1;
                if (prof.betti[k] < 0)
                    throw std::logic_error("negative reduced Betti number");
            }
        }
    }

    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_homology_cache.emplace(key, std::move(prof)).first->second;
}

bool cm_of_facets(const std::vector<Mask>& facets_in) {
    const FacetKey key = canonical_key(facets_in);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cm_cache.find(key);
        if (it != g_cm_cache.end()) return it->second;
    }
    const std::vector<Mask>& facets = key.facets;
    bool verdict = true;
    if (facets.empty() || (facets.size() == 1 && facets[0] == 0)) {
        verdict = true;
    } else {
        const int size0 = degree(facets[0]);
        bool pure = true;
        for (Mask f : facets) pure = pure && degree(f) == size0;
        if (!pure) {
            verdict = false;
        } else if (size0 - 1 <= 0) {
            verdict = true;  // points
        } else {
            const int dim = size0 - 1;
            HomologyProfile prof = homology_of_facets(facets);
            for (int k = -1; k < dim && verdict; ++k)
                if (prof.reduced(k) != 0) verdict = false;
            if (verdict) {
                Mask used = 0;
                for (Mask f : facets) used |= f;
                for (int v : indices_of(used)) {
                    std::vector<Mask> link;
                    for (Mask f : facets)
                        if (contains(f, v)) link.push_back(without_index(f, v));
                    if (!cm_of_facets(link)) {
                        verdict = false;
                        break;
                    }
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cm_cache.emplace(key, verdict);
    return verdict;
}

}  // namespace

int oracle_cap() {
    static const int cap = read_cap();
    return cap;
}

int hochster_cap() { return std::min(oracle_cap(), 14); }

void oracle_clear_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_homology_cache.clear();
    g_cm_cache.clear();
}

SimplicialComplex stanley_reisner(const MonomialIdeal& I) {
    if (I.n < 1 || I.n > oracle_cap())
        throw std::out_of_range("oracle: ambient beyond cap");
    for (Mask g : I.gens)
        if (g == 0) throw std::invalid_argument("oracle: unit ideal has no complex");
    const std::size_t size = static_cast<std::size_t>(1) << I.n;
    std::vector<char> in_ideal(size, 0);
    for (Mask g : I.gens) in_ideal[g] = 1;
    for (Mask m = 1; m < size; ++m) {
        if (in_ideal[m]) continue;
        for (Mask rest = m; rest; rest &= rest - 1) {
            if (in_ideal[m & ~(rest & (0u - rest))]) {
                in_ideal[m] = 1;
                break;
            }
        }
    }
    SimplicialComplex c{I.n, {}};
    for (Mask m = 0; m < size; ++m) {
        if (in_ideal[m]) continue;
        bool maximal = true;
        for (int i = 1; i <= I.n && maximal; ++i)
            if (!contains(m, i) && !in_ideal[with_index(m, i)]) maximal = false;
        if (maximal) c.facets.push_back(m);
    }
    return c;
}

std::vector<Mask> minimal_primes_bruteforce(const MonomialIdeal& I) {
    SimplicialComplex c = stanley_reisner(I);
    std::vector<Mask> primes;
    primes.reserve(c.facets.size());
    const Mask full = full_mask(I.n);
    for (Mask f : c.facets) primes.push_back(full & ~f);
    std::sort(primes.begin(), primes.end(), [](Mask a, Mask b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        if (a == b) return false;
        return slex_greater(a, b);
    });
    return primes;
}

int krull_dim_oracle(const MonomialIdeal& I) {
    SimplicialComplex c = stanley_reisner(I);
    int dim = 0;
    for (Mask f : c.facets) dim = std::max(dim, degree(f));
    return dim;
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
    return homology_of_facets(c.facets);
}

BettiTable hochster_betti(const MonomialIdeal& I) {
    if (I.n > hochster_cap())
        throw std::out_of_range("oracle: ambient beyond Hochster cap");
    SimplicialComplex c = stanley_reisner(I);
    BettiTable b;
    const std::size_t size = static_cast<std::size_t>(1) << I.n;
    std::vector<Mask> induced;
    for (Mask w = 1; w < size; ++w) {
        induced.clear();
        for (Mask f : c.facets) induced.push_back(f & w);
        std::sort(induced.begin(), induced.end(), [](Mask a, Mask b) {
            return degree(a) > degree(b);
        });
        std::vector<Mask> maximal;
        for (Mask f : induced) {
            bool covered = false;
            for (Mask g : maximal)
                if (divides(f, g)) {
                    covered = true;
                    break;
                }
            if (!covered) maximal.push_back(f);
        }
        HomologyProfile prof = homology_of_facets(maximal);
        const int j = degree(w);
        for (int i = 0; i <= j; ++i) {
            long long contrib = prof.reduced(j - i - 2);
            if (contrib) b.add(i, j, contrib);
        }
    }
    for (int j = 1; j <= I.n; ++j) {
        long long expect = static_cast<long long>(gens_of_degree(I, j).size());
        if (b.at(0, j) != expect)
            throw std::logic_error("hochster_betti: generator-count self-check failed");
    }
    return b;
}

CmOracleResult reisner_cm_check(const MonomialIdeal& I) {
    SimplicialComplex c = stanley_reisner(I);
    CmOracleResult r;
    r.is_pure = true;
    if (!c.facets.empty()) {
        const int s0 = degree(c.facets.front());
        for (Mask f : c.facets) r.is_pure = r.is_pure && degree(f) == s0;
    }
    r.is_cm = cm_of_facets(c.facets);
    return r;
}

int depth_oracle(const MonomialIdeal& I) {
    BettiTable b = hochster_betti(I);
    return I.n - 1 - b.pd();
}

}  // namespace tspread
