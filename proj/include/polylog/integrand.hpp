#pragma once

#include <string>
#include <vector>

#include "polylog/forms.hpp"
#include "polylog/indices.hpp"

namespace polylog {

/// Ordered word of 1-forms; the first letter is the innermost integrand.
struct TensorWord {
    int coeff = 1;
    std::vector<OneForm> letters;

    auto operator<=>(const TensorWord&) const = default;
};

struct Integrand {
    Bounds bounds;
    std::vector<TensorWord> words;

    int weight() const { return bounds.weight(); }
};

/// Full word sum of the continuation formula for the given bounds: iterates
/// every queue and branch vector, builds each letter on the transposed index
/// and drops words containing a vanishing letter. Letters are pure case
/// forms; duplicate words are merged with summed coefficients and the word
/// list is sorted canonically.
Integrand build_integrand(const Bounds& bounds);

/// One product of the multiple-logarithm formula: for queue entries j_t the
/// t-th letter is w_{f^t+1}(x(j_t)), kept both as a composite form and as
/// its distributable parts.
struct MultilogProduct {
    IndexQueue queue;
    std::vector<int> f;                         // 0-based slot per letter
    std::vector<std::vector<OneForm>> parts;    // 1 or 2 parts per letter
    std::vector<OneForm> letters;               // composite letters
};

std::vector<MultilogProduct> multilog_products(int n);

/// The n! grouped words (composite letters) of the multiple-logarithm
/// formula.
Integrand build_multilog_integrand(int n);

/// The same integrand with every composite letter distributed into pure
/// case forms.
Integrand build_multilog_distributed(int n);

/// Merge duplicate words and sort canonically; use before comparing
/// integrands for set equality.
Integrand canonicalized(const Integrand& I);

/// Paper-style display, one product per queue, composite letters
/// parenthesized. Only meaningful for all-ones bounds.
std::string render_grouped(int n);

/// Canonical listing, one word per line.
std::string render(const Integrand& I);

/// JSON dump: words as lists of letters, letters as lists of atoms with
/// 1-based coordinate ranges.
std::string to_json_string(const Integrand& I);

}  // namespace polylog
