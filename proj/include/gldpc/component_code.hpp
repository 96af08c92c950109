#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gldpc/field.hpp"

namespace gldpc {

using Word = std::vector<std::uint32_t>;

// A short block code used at every check node, together with a bounded
// distance decoder of radius t.
//
// Decoder contract (relied on by the flip decoder and the analysis layer):
//   * if some codeword lies within Hamming distance t of the input, bdd()
//     returns it (it is unique because the minimum distance is >= 2t+1);
//   * otherwise bdd() returns nullopt.  It never returns a codeword at
//     distance greater than t from the input.
class ComponentCode {
 public:
  enum class Family { kHamming, kReedSolomon, kGenericLinear };

  virtual ~ComponentCode() = default;

  const FiniteField& field() const { return field_; }
  int blocklength() const { return blocklength_; }    // symbols per codeword
  int dimension() const { return dimension_; }        // message symbols
  int radius() const { return radius_; }              // guaranteed correction radius t
  int minimum_distance() const { return min_distance_; }
  virtual Family family() const = 0;
  virtual std::string name() const = 0;

  // Systematic encoding: the message symbols appear verbatim at the code's
  // information positions (see information_positions()).
  virtual Word encode(std::span<const std::uint32_t> message) const = 0;

  // Positions of the message symbols inside a codeword, in message order.
  virtual std::vector<int> information_positions() const = 0;

  // Bounded distance decoding within radius t; nullopt when no codeword is
  // that close.
  virtual std::optional<Word> bdd(std::span<const std::uint32_t> word) const = 0;

  virtual bool is_codeword(std::span<const std::uint32_t> word) const = 0;

 protected:
  ComponentCode(FiniteField field, int blocklength, int dimension, int radius,
                int min_distance)
      : field_(field),
        blocklength_(blocklength),
        dimension_(dimension),
        radius_(radius),
        min_distance_(min_distance) {}

  void check_length(std::span<const std::uint32_t> word, int expected,
                    const char* what) const;

  FiniteField field_;
  int blocklength_;
  int dimension_;
  int radius_;
  int min_distance_;
};

// Binary Hamming code of order m: blocklength 2^m - 1, dimension 2^m - 1 - m,
// single error correction via syndrome lookup.
std::shared_ptr<const ComponentCode> hamming_code(int m);

// Reed-Solomon code of blocklength d and dimension k0 over a field of order
// q > d, evaluated at the first d powers of a fixed primitive element.
// Corrects t = floor((d - k0)/2) symbol errors by syndrome decoding with an
// error locator polynomial and a root search over the evaluation points.
std::shared_ptr<const ComponentCode> rs_code(int d, int k0, FiniteField field);

// Small linear code given by an explicit generator matrix (row-major, k0
// rows by d columns).  The whole codebook is enumerated, so the order q^k0
// must stay modest (at most 2^16 codewords).  The decoding radius defaults
// to floor((dmin-1)/2) and may be lowered.
std::shared_ptr<const ComponentCode> generic_code(
    FiniteField field, int blocklength,
    const std::vector<Word>& generator_rows, int radius = -1);

// Binary repetition code of length d as a generic code (useful for tiny
// test ensembles; minimum distance d).
std::shared_ptr<const ComponentCode> repetition_code(int d, int radius = -1);

// Parses a code description of the form "hamming:m=3" or "rs:d=30,k=24,q=31".
std::shared_ptr<const ComponentCode> parse_code_spec(const std::string& text);

}  // namespace gldpc
