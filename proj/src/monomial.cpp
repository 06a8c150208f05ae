#include "tspread/monomial.hpp"

namespace tspread {

std::vector<int> indices_of(Mask m) {
    std::vector<int> out;
    out.reserve(degree(m));
    while (m) {
        int i = std::countr_zero(m);
        out.push_back(i + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& indices, int n) {
    Mask m = 0;
    for (int i : indices) {
        if (i < 1 || i > n || n > kMaxVars)
            throw std::invalid_argument("monomial index out of ambient range");
        if (contains(m, i)) throw std::invalid_argument("repeated monomial index");
        m = with_index(m, i);
    }
    return m;
}

std::string to_text(Mask m) {
    if (!m) return "1";
    std::string s;
    for (int i : indices_of(m)) {
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i);
    }
    return s;
}

Mask reflect(Mask m, int n) {
    Mask r = 0;
    for (int i : indices_of(m)) r = with_index(r, n + 1 - i);
    return r;
}

bool is_t_spread(Mask m, int t) {
    if (t <= 0) return true;
    int prev = -1;
    while (m) {
        int i = std::countr_zero(m) + 1;
        if (prev > 0 && i - prev < t) return false;
        prev = i;
        m &= m - 1;
    }
    return true;
}

int slex_compare(Mask a, Mask b) {
    if (degree(a) != degree(b))
        throw std::invalid_argument("slex_compare requires equal degrees");
    if (a == b) return 0;
    Mask diff = a ^ b;
    int low = std::countr_zero(diff);
    return ((a >> low) & 1u) ? 1 : -1;
}

int lex_compare_multiset(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("lex compare requires equal degrees");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    }
    return 0;
}

long long binom(long long a, long long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long long count_M(int n, int d, int t) {
    if (n < 1 + (d - 1) * t) return 0;
    return binom(n - static_cast<long long>(t - 1) * (d - 1), d);
}

std::vector<Mask> enumerate_M(int n, int d, int t) {
    std::vector<Mask> out;
    if (d < 1 || n < 1 + (d - 1) * t || n > kMaxVars) return out;
    // combinations c_1 < ... < c_d of [n-(d-1)(t-1)] in lex-increasing
    // order map to i_k = c_k + (k-1)(t-1), slex-descending
    const int m = n - (d - 1) * (t - 1);
    std::vector<int> c(d);
    for (int k = 0; k < d; ++k) c[k] = k + 1;
    out.reserve(static_cast<std::size_t>(count_M(n, d, t)));
    while (true) {
        Mask w = 0;
        for (int k = 0; k < d; ++k) w = with_index(w, c[k] + k * (t - 1));
        out.push_back(w);
        int k = d - 1;
        while (k >= 0 && c[k] == m - (d - 1 - k)) --k;
        if (k < 0) break;
        ++c[k];
        for (int j = k + 1; j < d; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

Mask max_M(int n, int d, int t) {
    if (n < 1 + (d - 1) * t) throw std::invalid_argument("empty M_{n,d,t}");
    Mask w = 0;
    for (int k = 0; k < d; ++k) w = with_index(w, 1 + k * t);
    return w;
}

Mask min_M(int n, int d, int t) {
    if (n < 1 + (d - 1) * t) throw std::invalid_argument("empty M_{n,d,t}");
    Mask w = 0;
    for (int k = 0; k < d; ++k) w = with_index(w, n - k * t);
    return w;
}

Mask supp_t(Mask m, int t, int n) {
    if (m && max_index(m) > n + 1 - t)
        throw std::out_of_range("supp_t: support reaches past n+1-t");
    Mask r = 0;
    for (int i : indices_of(m)) r |= interval_mask(i, i + t - 1);
    return r;
}

Mask cosupp_t(Mask m, int t) {
    if (m && min_index(m) < t)
        throw std::out_of_range("cosupp_t: support starts below t");
    Mask r = 0;
    for (int i : indices_of(m)) r |= interval_mask(i - t + 1, i);
    return r;
}

}  // namespace tspread
