// Shared helpers for the test binaries: fixture loading and brute-force oracles.
#ifndef ELLOCAL_TESTS_SUPPORT_HPP_
#define ELLOCAL_TESTS_SUPPORT_HPP_

#include "ellocal/arith.hpp"
#include "ellocal/lmfdb.hpp"
#include "ellocal/polynomial.hpp"
#include "ellocal/weierstrass.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace support {

using namespace ellocal;

inline std::filesystem::path fixtures_dir()
{
    return ELLOCAL_TEST_FIXTURES;
}

struct CorpusCurve {
    std::string label;
    WeierstrassCurve curve;
    OracleRecord record;
};

inline std::vector<CorpusCurve> load_corpus()
{
    LmfdbConfig config;
    config.cache_dir = fixtures_dir() / "curves";
    config.offline = true;
    LmfdbClient client(config);
    std::vector<CorpusCurve> out;
    std::ifstream in(fixtures_dir() / "corpus.csv");
    for (std::string line; std::getline(in, line);) {
        auto k = line.rfind(',');
        std::string label = line.substr(k + 1);
        out.push_back({label, WeierstrassCurve::parse(line.substr(0, k)), client.fetch_curve(label)});
    }
    return out;
}

struct TorsionRow {
    std::string label;
    std::int64_t p;
    Integer ell;
    std::int64_t torsion;
};

inline std::vector<TorsionRow> load_local_torsion()
{
    std::vector<TorsionRow> rows;
    std::ifstream in(fixtures_dir() / "local_torsion.csv");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string label, p, ell, n;
        std::getline(ss, label, ',');
        std::getline(ss, p, ',');
        std::getline(ss, ell, ',');
        std::getline(ss, n, ',');
        rows.push_back({label, std::stoll(p), Integer(ell), std::stoll(n)});
    }
    return rows;
}

/* valuation by repeated division */
inline int naive_valuation(Integer x, long ell)
{
    int v = 0;
    while (x % ell == 0) {
        x /= ell;
        ++v;
    }
    return v;
}

inline int small_valuation(std::int64_t x, std::int64_t ell, int cap)
{
    if (x == 0)
        return cap;
    int v = 0;
    while (x % ell == 0 && v < cap) {
        x /= ell;
        ++v;
    }
    return v;
}

/* Roots in Z_ell of a squarefree integer polynomial, by exhaustive search
 * modulo ell^N. A residue x certifies a root when v(f(x)) > 2 v(f'(x)); the
 * root is then keyed by x mod ell^(v(f'(x)) + 1). A residue with
 * f(x) = 0 mod ell^N but no certificate makes the instance ambiguous. */
struct BruteRoots {
    bool ambiguous = false;
    int count = 0;
};

inline BruteRoots brute_roots_mod(std::vector<std::int64_t> const& coeffs, std::int64_t ell, int N)
{
    std::int64_t modulus = 1;
    for (int i = 0; i < N; ++i)
        modulus *= ell;
    auto eval = [&](std::vector<std::int64_t> const& c, std::int64_t x) {
        std::int64_t acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = ((acc * x + *it) % modulus + modulus) % modulus;
        return acc;
    };
    std::vector<std::int64_t> deriv;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        deriv.push_back(coeffs[i] * static_cast<std::int64_t>(i));
    BruteRoots out;
    std::set<std::pair<int, std::int64_t>> keys;
    for (std::int64_t x = 0; x < modulus; ++x) {
        int vf = small_valuation(eval(coeffs, x), ell, N);
        int vd = small_valuation(eval(deriv, x), ell, N);
        if (vf > 2 * vd) {
            std::int64_t key_mod = 1;
            for (int i = 0; i <= vd; ++i)
                key_mod *= ell;
            keys.insert({vd, x % key_mod});
        } else if (vf == N) {
            out.ambiguous = true;
        }
    }
    out.count = static_cast<int>(keys.size());
    return out;
}

inline Integer random_integer(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return Integer(static_cast<long>(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng)));
}

}  // namespace support

#endif
