#include "gldpc/component_code.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gldpc {

void ComponentCode::check_length(std::span<const std::uint32_t> word,
                                 int expected, const char* what) const {
  if (static_cast<int>(word.size()) != expected) {
    throw std::invalid_argument(std::string(what) + " has length " +
                                std::to_string(word.size()) + ", expected " +
                                std::to_string(expected));
  }
  for (std::uint32_t s : word) {
    if (!field_.valid(s)) {
      throw std::invalid_argument(std::string(what) +
                                  " contains a symbol outside the field");
    }
  }
}

namespace {

// ---------------------------------------------------------------------------
// Hamming codes
// ---------------------------------------------------------------------------
//
// Positions are indexed 1..d.  The parity check matrix column at position p
// is the binary representation of p, so the syndrome of a received word is
// the XOR of the positions holding a 1, and a single error at position p
// produces syndrome p.  Positions that are powers of two carry the parity
// bits; all other positions carry message bits, which makes the encoder
// systematic.
class HammingCode final : public ComponentCode {
 public:
  explicit HammingCode(int m)
      : ComponentCode(FiniteField::prime(2), (1 << m) - 1, (1 << m) - 1 - m,
                      /*radius=*/1, /*min_distance=*/3),
        m_(m) {
    for (int pos = 1; pos <= blocklength_; ++pos) {
      if ((pos & (pos - 1)) != 0) data_positions_.push_back(pos);
    }
  }

  Family family() const override { return Family::kHamming; }
  std::string name() const override {
    return "hamming(" + std::to_string(blocklength_) + "," +
           std::to_string(dimension_) + ")";
  }

  std::vector<int> information_positions() const override {
    std::vector<int> zero_based;
    zero_based.reserve(data_positions_.size());
    for (int pos : data_positions_) zero_based.push_back(pos - 1);
    return zero_based;
  }

  Word encode(std::span<const std::uint32_t> message) const override {
    check_length(message, dimension_, "message");
    Word out(blocklength_, 0);
    std::uint32_t syndrome = 0;
    for (int idx = 0; idx < dimension_; ++idx) {
      const int pos = data_positions_[idx];
      out[pos - 1] = message[idx];
      if (message[idx]) syndrome ^= static_cast<std::uint32_t>(pos);
    }
    // Parity positions are single bits of the syndrome, so setting parity
    // bit 2^b to bit b of the data syndrome zeroes the total syndrome.
    for (int b = 0; b < m_; ++b) {
      const std::uint32_t bit = (syndrome >> b) & 1;
      out[(1 << b) - 1] = bit;
    }
    return out;
  }

  std::optional<Word> bdd(std::span<const std::uint32_t> word) const override {
    check_length(word, blocklength_, "word");
    const std::uint32_t syndrome = compute_syndrome(word);
    Word out(word.begin(), word.end());
    if (syndrome == 0) return out;
    // A nonzero syndrome is always a valid position, so every word is within
    // distance 1 of a codeword (the code is perfect).
    out[syndrome - 1] ^= 1u;
    return out;
  }

  bool is_codeword(std::span<const std::uint32_t> word) const override {
    check_length(word, blocklength_, "word");
    return compute_syndrome(word) == 0;
  }

 private:
  std::uint32_t compute_syndrome(std::span<const std::uint32_t> word) const {
    std::uint32_t syndrome = 0;
    for (int pos = 1; pos <= blocklength_; ++pos) {
      if (word[pos - 1]) syndrome ^= static_cast<std::uint32_t>(pos);
    }
    return syndrome;
  }

  int m_;
  std::vector<int> data_positions_;
};

// ---------------------------------------------------------------------------
// Generic linear codes (explicit codebook)
// ---------------------------------------------------------------------------
class GenericLinearCode final : public ComponentCode {
 public:
  GenericLinearCode(FiniteField field, int blocklength,
                    std::vector<Word> generator_rows, int radius,
                    int min_distance, std::vector<Word> codebook,
                    std::vector<int> info_positions)
      : ComponentCode(field, blocklength,
                      static_cast<int>(generator_rows.size()), radius,
                      min_distance),
        generator_rows_(std::move(generator_rows)),
        info_positions_(std::move(info_positions)),
        codebook_(std::move(codebook)) {
    sorted_codebook_ = codebook_;
    std::sort(sorted_codebook_.begin(), sorted_codebook_.end());
  }

  Family family() const override { return Family::kGenericLinear; }
  std::string name() const override {
    return "linear(" + std::to_string(blocklength_) + "," +
           std::to_string(dimension_) + ")";
  }

  std::vector<int> information_positions() const override {
    return info_positions_;
  }

  Word encode(std::span<const std::uint32_t> message) const override {
    check_length(message, dimension_, "message");
    Word out(blocklength_, 0);
    for (int r = 0; r < dimension_; ++r) {
      if (message[r] == 0) continue;
      for (int col = 0; col < blocklength_; ++col) {
        out[col] = field_.add(
            out[col], field_.mul(message[r], generator_rows_[r][col]));
      }
    }
    return out;
  }

  std::optional<Word> bdd(std::span<const std::uint32_t> word) const override {
    check_length(word, blocklength_, "word");
    // The minimum distance is at least 2t+1, so at most one codeword can sit
    // within radius t; a full scan is exact.
    for (const Word& cw : codebook_) {
      int dist = 0;
      for (int col = 0; col < blocklength_ && dist <= radius_; ++col) {
        dist += (cw[col] != word[col]);
      }
      if (dist <= radius_) return cw;
    }
    return std::nullopt;
  }

  bool is_codeword(std::span<const std::uint32_t> word) const override {
    check_length(word, blocklength_, "word");
    Word key(word.begin(), word.end());
    return std::binary_search(sorted_codebook_.begin(),
                              sorted_codebook_.end(), key);
  }

  const std::vector<Word>& codebook() const { return codebook_; }

 private:
  std::vector<Word> generator_rows_;
  std::vector<int> info_positions_;
  std::vector<Word> codebook_;
  std::vector<Word> sorted_codebook_;
};

}  // namespace

std::shared_ptr<const ComponentCode> hamming_code(int m) {
  if (m < 2 || m > 16) {
    throw std::invalid_argument("hamming_code order must satisfy 2 <= m <= 16");
  }
  return std::make_shared<HammingCode>(m);
}

std::shared_ptr<const ComponentCode> generic_code(
    FiniteField field, int blocklength,
    const std::vector<Word>& generator_rows, int radius) {
  if (blocklength < 1) throw std::invalid_argument("blocklength must be >= 1");
  if (generator_rows.empty()) {
    throw std::invalid_argument("generator matrix must have at least one row");
  }
  for (const Word& row : generator_rows) {
    if (static_cast<int>(row.size()) != blocklength) {
      throw std::invalid_argument("generator row length != blocklength");
    }
    for (std::uint32_t s : row) {
      if (!field.valid(s)) {
        throw std::invalid_argument("generator entry outside the field");
      }
    }
  }
  const int k = static_cast<int>(generator_rows.size());
  double size = 1;
  for (int r = 0; r < k; ++r) size *= field.order();
  if (size > 65536.0) {
    throw std::invalid_argument(
        "generic_code codebook would exceed 2^16 codewords");
  }

  // Enumerate the codebook by iterating message vectors in odometer order.
  const auto count = static_cast<std::uint64_t>(size);
  std::vector<Word> codebook;
  codebook.reserve(count);
  Word message(k, 0);
  Word zero(blocklength, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Word cw(blocklength, 0);
    for (int r = 0; r < k; ++r) {
      if (message[r] == 0) continue;
      for (int col = 0; col < blocklength; ++col) {
        cw[col] = field.add(cw[col], field.mul(message[r], generator_rows[r][col]));
      }
    }
    codebook.push_back(std::move(cw));
    for (int r = 0; r < k; ++r) {
      message[r] = (message[r] + 1) % field.order();
      if (message[r] != 0) break;
    }
  }

  // Distinct codewords certify full rank; the minimum distance is the least
  // weight of a nonzero codeword.
  {
    std::vector<Word> unique = codebook;
    std::sort(unique.begin(), unique.end());
    if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) {
      throw std::invalid_argument("generator matrix rows are dependent");
    }
  }
  int dmin = blocklength;
  for (const Word& cw : codebook) {
    if (cw == zero) continue;
    int w = 0;
    for (int col = 0; col < blocklength; ++col) w += (cw[col] != 0);
    dmin = std::min(dmin, w);
  }
  const int max_radius = (dmin - 1) / 2;
  if (radius < 0) radius = max_radius;
  if (radius > max_radius) {
    throw std::invalid_argument(
        "requested radius exceeds (dmin-1)/2 = " + std::to_string(max_radius));
  }

  // Information positions: pivot columns of the generator in row echelon
  // form.  The encoder uses the rows as given, so report pivots of a copy.
  std::vector<int> pivots;
  {
    std::vector<Word> rows = generator_rows;
    int rank = 0;
    for (int col = 0; col < blocklength && rank < k; ++col) {
      int pivot = -1;
      for (int r = rank; r < k; ++r) {
        if (rows[r][col] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      const std::uint32_t scale = field.inv(rows[rank][col]);
      for (int cc = 0; cc < blocklength; ++cc) {
        rows[rank][cc] = field.mul(rows[rank][cc], scale);
      }
      for (int r = 0; r < k; ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        const std::uint32_t factor = rows[r][col];
        for (int cc = 0; cc < blocklength; ++cc) {
          rows[r][cc] = field.sub(rows[r][cc], field.mul(factor, rows[rank][cc]));
        }
      }
      pivots.push_back(col);
      ++rank;
    }
  }

  return std::make_shared<GenericLinearCode>(field, blocklength,
                                             generator_rows, radius, dmin,
                                             std::move(codebook), pivots);
}

std::shared_ptr<const ComponentCode> repetition_code(int d, int radius) {
  if (d < 1) throw std::invalid_argument("repetition length must be >= 1");
  std::vector<Word> rows{Word(d, 1)};
  return generic_code(FiniteField::prime(2), d, rows, radius);
}

std::shared_ptr<const ComponentCode> parse_code_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::map<std::string, long> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("bad code parameter '" + item + "'");
      }
      kv[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    }
  }
  auto need = [&kv, &text](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw std::invalid_argument("code spec '" + text + "' is missing '" +
                                  key + "'");
    }
    return it->second;
  };
  if (kind == "hamming") return hamming_code(static_cast<int>(need("m")));
  if (kind == "rs") {
    const int d = static_cast<int>(need("d"));
    const int k = static_cast<int>(need("k"));
    const auto q = static_cast<std::uint32_t>(need("q"));
    return rs_code(d, k, FiniteField::of_order(q));
  }
  if (kind == "repetition") {
    return repetition_code(static_cast<int>(need("d")));
  }
  throw std::invalid_argument("unknown code family '" + kind + "'");
}

}  // namespace gldpc
