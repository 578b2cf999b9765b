#include "polylog/integrand.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace polylog {

namespace {

// i_eff(r) applies the transpositions of steps r+1..K-1 (0-based) to j_r,
// innermost step first. Realized as a position permutation; the depth-3
// worked expansion fixes the application order.
std::vector<MultiIndex> effective_indices(const IndexQueue& q, unsigned delta_mask,
                                          const Bounds& padded) {
    const int K = q.length();
    const int n = q.bounds().depth();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<MultiIndex> eff;
    eff.reserve(K);
    std::vector<std::vector<int>> perms(K);
    perms[K - 1] = perm;
    for (int r = K - 2; r >= 0; --r) {
        // append T^{r+1} as the first map applied: perm_r = sigma o perm_{r+1}
        const QueueStep& d = q.step(r + 1);
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        if ((delta_mask >> (r + 1)) & 1u) {
            if (d.t_s == 1 && d.a < n) std::swap(sigma[d.s], sigma[d.a]);
        }
        perms[r].resize(n);
        for (int t = 0; t < n; ++t) perms[r][t] = sigma[perms[r + 1][t]];
    }
    for (int r = 0; r < K; ++r) {
        std::vector<int> comps(n);
        for (int t = 0; t < n; ++t) comps[t] = q.entry(r)[perms[r][t]];
        eff.emplace_back(std::move(comps), padded);
    }
    return eff;
}

Integrand merged(Bounds bounds, std::map<std::vector<OneForm>, int>&& acc) {
    Integrand I{std::move(bounds), {}};
    for (auto& [letters, coeff] : acc) {
        if (coeff == 0) continue;
        I.words.push_back({coeff, letters});
    }
    return I;
}

}  // namespace

Integrand build_integrand(const Bounds& bounds) {
    const int K = bounds.weight();
    const Bounds padded = padded_bounds(bounds);
    std::map<std::vector<OneForm>, int> acc;

    for (const IndexQueue& q : enumerate_queues(bounds)) {
        for (unsigned mask = 0; mask < (1u << K); ++mask) {
            auto eff = effective_indices(q, mask, padded);
            std::vector<OneForm> letters;
            letters.reserve(K);
            bool dead = false;
            for (int r = 0; r < K && !dead; ++r) {
                OneForm w = build_w(q, r, (mask >> r) & 1u, eff[r]);
                if (w.is_zero())
                    dead = true;
                else
                    letters.push_back(std::move(w));
            }
            if (!dead) acc[letters] += 1;
        }
    }
    return merged(bounds, std::move(acc));
}

std::vector<MultilogProduct> multilog_products(int n) {
    if (n < 1) throw error("multilog_products: depth must be at least 1");
    Bounds ones(std::vector<int>(n, 1));
    std::vector<MultilogProduct> out;
    for (IndexQueue& q : enumerate_queues(ones)) {
        MultilogProduct prod{q, position_functions(q), {}, {}};
        for (int t = 0; t < n; ++t) {
            prod.parts.push_back(multilog_letter_parts(prod.f[t], q.entry(t)));
            prod.letters.push_back(multilog_letter(prod.f[t], q.entry(t)));
        }
        out.push_back(std::move(prod));
    }
    return out;
}

Integrand build_multilog_integrand(int n) {
    Integrand I{Bounds(std::vector<int>(n, 1)), {}};
    for (const auto& prod : multilog_products(n)) I.words.push_back({1, prod.letters});
    return I;
}

Integrand build_multilog_distributed(int n) {
    std::map<std::vector<OneForm>, int> acc;
    for (const auto& prod : multilog_products(n)) {
        std::vector<std::vector<OneForm>> words{{}};
        for (const auto& parts : prod.parts) {
            std::vector<std::vector<OneForm>> next;
            for (const auto& w : words)
                for (const auto& p : parts) {
                    auto ext = w;
                    ext.push_back(p);
                    next.push_back(std::move(ext));
                }
            words = std::move(next);
        }
        for (auto& w : words) acc[w] += 1;
    }
    return merged(Bounds(std::vector<int>(n, 1)), std::move(acc));
}

Integrand canonicalized(const Integrand& I) {
    std::map<std::vector<OneForm>, int> acc;
    for (const auto& w : I.words) acc[w.letters] += w.coeff;
    return merged(I.bounds, std::move(acc));
}

std::string render_grouped(int n) {
    std::ostringstream os;
    bool first_prod = true;
    for (const auto& prod : multilog_products(n)) {
        os << (first_prod ? "" : "\n+ ");
        first_prod = false;
        for (int t = 0; t < n; ++t) {
            if (t) os << ' ';
            if (prod.parts[t].size() == 1) {
                os << render_form(prod.parts[t][0], n);
            } else {
                os << '(' << render_form(prod.parts[t][0], n) << '+'
                   << render_form(prod.parts[t][1], n) << ')';
            }
        }
    }
    os << '\n';
    return os.str();
}

std::string render(const Integrand& I) {
    if (I.words.empty()) return "0\n";
    const int n = I.bounds.depth();
    std::ostringstream os;
    bool first = true;
    for (const auto& w : I.words) {
        os << (first ? "" : "\n+ ");
        first = false;
        if (w.coeff != 1) os << w.coeff << "*";
        for (size_t k = 0; k < w.letters.size(); ++k)
            os << (k ? " " : "") << render_form(w.letters[k], n);
    }
    os << '\n';
    return os.str();
}

std::string to_json_string(const Integrand& I) {
    nlohmann::json j;
    j["bounds"] = I.bounds.m;
    j["words"] = nlohmann::json::array();
    for (const auto& w : I.words) {
        nlohmann::json jw;
        jw["coeff"] = w.coeff;
        jw["letters"] = nlohmann::json::array();
        for (const auto& letter : w.letters) {
            nlohmann::json jl = nlohmann::json::array();
            for (const auto& [atom, c] : letter.terms())
                jl.push_back({{"kind", atom.kind == LogAtom::Kind::Coord ? "coord" : "one_minus"},
                              {"lo", atom.lo + 1},
                              {"hi", atom.hi + 1},
                              {"coeff", c}});
            jw["letters"].push_back(jl);
        }
        j["words"].push_back(jw);
    }
    return j.dump(2);
}

}  // namespace polylog
