#include <algorithm>
#include <stdexcept>

#include "gldpc/component_code.hpp"

namespace gldpc {
namespace {

// Reed-Solomon code as an evaluation code: codewords are the evaluations of
// message polynomials of degree < k0 at the points a_j = alpha^j,
// j = 0..d-1, alpha a fixed primitive element.  The code is MDS, so the
// minimum distance is d - k0 + 1 and t = floor((d - k0)/2).
//
// Decoding uses the parity structure of the dual code: with the column
// multipliers w_j = prod_{l != j} (a_j - a_l)^{-1}, the r = d - k0 syndromes
// of a received word v are S_i = sum_j w_j v_j a_j^i, all zero exactly for
// codewords.  Errors e with support E give S_i = sum_{j in E} Y_j X_j^i,
// X_j = a_j, Y_j = w_j e_j, which is the classical key equation setup: an
// error locator polynomial is found by Berlekamp-Massey, its roots by a
// Chien-style scan over the inverse evaluation points, and the magnitudes by
// Forney's formula.
class ReedSolomonCode final : public ComponentCode {
 public:
  ReedSolomonCode(int d, int k0, FiniteField field)
      : ComponentCode(field, d, k0, (d - k0) / 2, d - k0 + 1) {
    const int q = static_cast<int>(field_.order());
    if (d < 2 || d > q - 1) {
      throw std::invalid_argument(
          "rs_code blocklength must satisfy 2 <= d <= q-1");
    }
    if (k0 < 1 || k0 >= d) {
      throw std::invalid_argument("rs_code dimension must satisfy 1 <= k0 < d");
    }

    const std::uint32_t alpha = field_.primitive_element();
    points_.resize(d);
    points_[0] = 1;
    for (int j = 1; j < d; ++j) points_[j] = field_.mul(points_[j - 1], alpha);
    inv_points_.resize(d);
    for (int j = 0; j < d; ++j) inv_points_[j] = field_.inv(points_[j]);

    // Dual-code column multipliers.
    dual_mult_.resize(d);
    for (int j = 0; j < d; ++j) {
      std::uint32_t prod = 1;
      for (int l = 0; l < d; ++l) {
        if (l == j) continue;
        prod = field_.mul(prod, field_.sub(points_[j], points_[l]));
      }
      dual_mult_[j] = field_.inv(prod);
    }

    // Systematic encoder: interpolate through the message at the first k0
    // points and evaluate at the rest.  encode_matrix_[j - k0][i] is the
    // Lagrange basis polynomial for point i evaluated at point j.
    encode_matrix_.assign(d - k0, Word(k0, 0));
    for (int j = k0; j < d; ++j) {
      for (int i = 0; i < k0; ++i) {
        std::uint32_t num = 1;
        std::uint32_t den = 1;
        for (int l = 0; l < k0; ++l) {
          if (l == i) continue;
          num = field_.mul(num, field_.sub(points_[j], points_[l]));
          den = field_.mul(den, field_.sub(points_[i], points_[l]));
        }
        encode_matrix_[j - k0][i] = field_.mul(num, field_.inv(den));
      }
    }
  }

  Family family() const override { return Family::kReedSolomon; }
  std::string name() const override {
    return "rs(" + std::to_string(blocklength_) + "," +
           std::to_string(dimension_) + ") over " + field_.describe();
  }

  std::vector<int> information_positions() const override {
    std::vector<int> pos(dimension_);
    for (int i = 0; i < dimension_; ++i) pos[i] = i;
    return pos;
  }

  Word encode(std::span<const std::uint32_t> message) const override {
    check_length(message, dimension_, "message");
    Word out(blocklength_, 0);
    std::copy(message.begin(), message.end(), out.begin());
    for (int j = dimension_; j < blocklength_; ++j) {
      std::uint32_t acc = 0;
      const Word& row = encode_matrix_[j - dimension_];
      for (int i = 0; i < dimension_; ++i) {
        acc = field_.add(acc, field_.mul(row[i], message[i]));
      }
      out[j] = acc;
    }
    return out;
  }

  bool is_codeword(std::span<const std::uint32_t> word) const override {
    check_length(word, blocklength_, "word");
    return syndromes_zero(compute_syndromes(word));
  }

  std::optional<Word> bdd(std::span<const std::uint32_t> word) const override {
    check_length(word, blocklength_, "word");
    const Word syn = compute_syndromes(word);
    Word out(word.begin(), word.end());
    if (syndromes_zero(syn)) return out;
    if (radius_ == 0) return std::nullopt;

    // Berlekamp-Massey: shortest LFSR generating the syndrome sequence.
    const int r = blocklength_ - dimension_;
    Word locator{1};
    Word prev{1};
    int lfsr_len = 0;
    int gap = 1;
    std::uint32_t prev_disc = 1;
    for (int n = 0; n < r; ++n) {
      std::uint32_t disc = syn[n];
      for (int i = 1; i <= lfsr_len && i < static_cast<int>(locator.size());
           ++i) {
        disc = field_.add(disc, field_.mul(locator[i], syn[n - i]));
      }
      if (disc == 0) {
        ++gap;
        continue;
      }
      const std::uint32_t scale = field_.mul(disc, field_.inv(prev_disc));
      if (2 * lfsr_len <= n) {
        Word saved = locator;
        subtract_shifted(locator, scale, prev, gap);
        lfsr_len = n + 1 - lfsr_len;
        prev = std::move(saved);
        prev_disc = disc;
        gap = 1;
      } else {
        subtract_shifted(locator, scale, prev, gap);
        ++gap;
      }
    }
    if (lfsr_len > radius_) return std::nullopt;
    while (!locator.empty() && locator.back() == 0) locator.pop_back();
    if (static_cast<int>(locator.size()) != lfsr_len + 1) return std::nullopt;

    // Root search over the inverse evaluation points.
    std::vector<int> error_positions;
    for (int j = 0; j < blocklength_; ++j) {
      if (poly_eval(locator, inv_points_[j]) == 0) error_positions.push_back(j);
    }
    if (static_cast<int>(error_positions.size()) != lfsr_len) {
      return std::nullopt;
    }

    // Forney: with the evaluator Omega = S * locator mod x^r, the magnitude
    // at position j is Y_j = -X_j * Omega(1/X_j) / locator'(1/X_j) and the
    // symbol error is e_j = Y_j / w_j.
    Word evaluator(r, 0);
    for (int i = 0; i < r; ++i) {
      std::uint32_t acc = 0;
      for (int l = 0; l <= i && l < static_cast<int>(locator.size()); ++l) {
        acc = field_.add(acc, field_.mul(locator[l], syn[i - l]));
      }
      evaluator[i] = acc;
    }
    Word derivative(std::max<size_t>(locator.size() - 1, 1), 0);
    for (std::size_t i = 1; i < locator.size(); ++i) {
      // Formal derivative: i * locator[i], i reduced mod the characteristic.
      std::uint32_t factor = i % field_.characteristic();
      std::uint32_t term = 0;
      for (std::uint32_t rep = 0; rep < factor; ++rep) {
        term = field_.add(term, locator[i]);
      }
      derivative[i - 1] = term;
    }
    for (int j : error_positions) {
      const std::uint32_t x_inv = inv_points_[j];
      const std::uint32_t den = poly_eval(derivative, x_inv);
      if (den == 0) return std::nullopt;
      const std::uint32_t num =
          field_.mul(points_[j], poly_eval(evaluator, x_inv));
      const std::uint32_t magnitude =
          field_.neg(field_.mul(num, field_.inv(den)));
      const std::uint32_t symbol_error =
          field_.mul(magnitude, field_.inv(dual_mult_[j]));
      out[j] = field_.sub(out[j], symbol_error);
    }

    // The decoder must never return a word at distance > t, so certify the
    // candidate before accepting it.
    if (!syndromes_zero(compute_syndromes(out))) return std::nullopt;
    return out;
  }

 private:
  Word compute_syndromes(std::span<const std::uint32_t> word) const {
    const int r = blocklength_ - dimension_;
    Word syn(r, 0);
    Word scaled(blocklength_);
    for (int j = 0; j < blocklength_; ++j) {
      scaled[j] = field_.mul(dual_mult_[j], word[j]);
    }
    for (int i = 0; i < r; ++i) {
      std::uint32_t acc = 0;
      for (int j = 0; j < blocklength_; ++j) acc = field_.add(acc, scaled[j]);
      syn[i] = acc;
      if (i + 1 < r) {
        for (int j = 0; j < blocklength_; ++j) {
          scaled[j] = field_.mul(scaled[j], points_[j]);
        }
      }
    }
    return syn;
  }

  static bool syndromes_zero(const Word& syn) {
    return std::all_of(syn.begin(), syn.end(),
                       [](std::uint32_t s) { return s == 0; });
  }

  std::uint32_t poly_eval(const Word& poly, std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      acc = field_.add(field_.mul(acc, x), *it);
    }
    return acc;
  }

  // poly -= scale * x^shift * other
  void subtract_shifted(Word& poly, std::uint32_t scale, const Word& other,
                        int shift) const {
    if (poly.size() < other.size() + shift) poly.resize(other.size() + shift, 0);
    for (std::size_t i = 0; i < other.size(); ++i) {
      poly[i + shift] =
          field_.sub(poly[i + shift], field_.mul(scale, other[i]));
    }
  }

  Word points_;
  Word inv_points_;
  Word dual_mult_;
  std::vector<Word> encode_matrix_;
};

}  // namespace

std::shared_ptr<const ComponentCode> rs_code(int d, int k0, FiniteField field) {
  return std::make_shared<ReedSolomonCode>(d, k0, field);
}

}  // namespace gldpc
