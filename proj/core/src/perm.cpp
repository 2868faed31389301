#include "wqo/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <sstream>

#include "wqo/error.hpp"

namespace wqo {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline))
{
    const int n = size();
    positions_.assign(oneline_.size(), 0);
    for (int i = 0; i < n; ++i) {
        int v = oneline_[static_cast<std::size_t>(i)];
        if (v < 1 || v > n || positions_[static_cast<std::size_t>(v - 1)] != 0)
            throw InputError("not a permutation of 1.." + std::to_string(n));
        positions_[static_cast<std::size_t>(v - 1)] = i + 1;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 0) throw InputError("negative permutation size");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation compose(const Permutation& outer, const Permutation& inner)
{
    if (outer.size() != inner.size()) throw InputError("composing permutations of different sizes");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(inner.size()));
    for (int i = 1; i <= inner.size(); ++i) out.push_back(outer(inner(i)));
    return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int v = 1; v <= p.size(); ++v) out.push_back(p.position_of(v));
    return Permutation(std::move(out));
}

namespace {

/// Depth-first choice of host positions. For pattern index t the chosen host
/// value must lie strictly between the images of the closest smaller and
/// closest larger pattern values placed before t.
class PatternSearch {
public:
    PatternSearch(std::span<const int> host, std::span<const int> pattern) : host_(host), pattern_(pattern)
    {
        const auto k = pattern.size();
        below_.assign(k, -1);
        above_.assign(k, -1);
        for (std::size_t t = 0; t < k; ++t) {
            int lo = INT_MIN;
            int hi = INT_MAX;
            for (std::size_t s = 0; s < t; ++s) {
                int v = pattern[s];
                if (v < pattern[t] && v > lo) {
                    lo = v;
                    below_[t] = static_cast<int>(s);
                }
                if (v > pattern[t] && v < hi) {
                    hi = v;
                    above_[t] = static_cast<int>(s);
                }
            }
        }
        chosen_.assign(k, 0);
    }

    bool run() { return place(0, 0); }

private:
    bool place(std::size_t t, std::size_t from)
    {
        if (t == pattern_.size()) return true;
        const std::size_t remaining = pattern_.size() - t;
        for (std::size_t i = from; i + remaining <= host_.size(); ++i) {
            int v = host_[i];
            if (below_[t] >= 0 && v < chosen_[static_cast<std::size_t>(below_[t])]) continue;
            if (above_[t] >= 0 && v > chosen_[static_cast<std::size_t>(above_[t])]) continue;
            chosen_[t] = v;
            if (place(t + 1, i + 1)) return true;
        }
        return false;
    }

    std::span<const int> host_;
    std::span<const int> pattern_;
    std::vector<int> below_;
    std::vector<int> above_;
    std::vector<int> chosen_;
};

void require_even(int n, int minimum)
{
    if (n < minimum || n % 2 != 0)
        throw InputError("family size must be even and at least " + std::to_string(minimum));
}

Permutation checked(std::vector<int> oneline, int n)
{
    if (static_cast<int>(oneline.size()) != n) throw std::logic_error("family schema produced the wrong length");
    return Permutation(std::move(oneline));
}

} // namespace

bool contains_pattern(const Permutation& host, const Permutation& pattern)
{
    if (pattern.size() > host.size()) return false;
    return PatternSearch(host.oneline(), pattern.oneline()).run();
}

bool is_convex(const Permutation& p)
{
    int lo = INT_MAX;
    int hi = INT_MIN;
    for (int v = p.size(); v >= 1; --v) {
        int pos = p.position_of(v);
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
        if (hi - lo + 1 != p.size() - v + 1) return false;
    }
    return true;
}

bool verify_biconvex_witness(const Permutation& p, const BiconvexWitness& w)
{
    if (w.mu.size() != p.size() || w.rho.size() != p.size()) return false;
    return is_convex(w.mu) && is_convex(w.rho) && compose(w.mu, inverse(w.rho)) == p;
}

Graph permutation_graph(const Permutation& p)
{
    const int n = p.size();
    GraphBuilder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.position_of(i) > p.position_of(j)) b.add_edge(i, j);
    return std::move(b).build();
}

Permutation star_perm_t(int n)
{
    require_even(n, 6);
    std::vector<int> v{4, 2};
    for (int j = 3; j <= n / 2; ++j) {
        v.push_back(2 * j);
        v.push_back(2 * j - 5);
    }
    v.push_back(n - 1);
    v.push_back(n - 3);
    return checked(std::move(v), n);
}

Permutation star_perm_s(int n)
{
    require_even(n, 8);
    std::vector<int> v{2, 3, 5, 1};
    for (int j = 2; j <= n / 2 - 3; ++j) {
        v.push_back(2 * j + 3);
        v.push_back(2 * j);
    }
    for (int x : {n, n - 4, n - 1, n - 2}) v.push_back(x);
    return checked(std::move(v), n);
}

Permutation rho_star(int n)
{
    require_even(n, 8);
    std::vector<int> v{1, 2};
    for (int odd = 3; odd <= n - 1; odd += 2) v.push_back(odd);
    v.push_back(n);
    for (int even = n - 2; even >= 4; even -= 2) v.push_back(even);
    return checked(std::move(v), n);
}

Permutation mu_star(int n)
{
    require_even(n, 8);
    std::vector<int> v{2};
    for (int odd = 3; odd <= n - 3; odd += 2) v.push_back(odd);
    v.push_back(n);
    v.push_back(n - 1);
    for (int even = n - 2; even >= 4; even -= 2) v.push_back(even);
    v.push_back(1);
    return checked(std::move(v), n);
}

BiconvexWitness star_witness_s(int n) { return {mu_star(n), rho_star(n)}; }

Permutation parse_permutation(std::string_view text)
{
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
        throw InputError("permutation must be written as (a,b,...)");
    std::string_view body(compact);
    body = body.substr(1, body.size() - 2);
    std::vector<int> values;
    while (!body.empty()) {
        auto comma = body.find(',');
        auto tok = body.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InputError("bad permutation entry '" + std::string(tok) + "'");
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw InputError("trailing comma in permutation");
    }
    return Permutation(std::move(values));
}

std::string to_string(const Permutation& p)
{
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? "," : "") << p(i);
    os << ')';
    return os.str();
}

} // namespace wqo
