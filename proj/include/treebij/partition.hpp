#pragma once

#include <functional>
#include <string>
#include <vector>

namespace treebij {

// Integer partition stored as part multiplicities: mult(i) is the number of
// parts equal to i (i >= 1). The empty partition is the partition of 0.
class Partition {
 public:
  Partition() = default;

  static Partition from_parts(std::vector<int> parts);
  static Partition from_multiplicities(std::vector<int> mult);  // mult[0] = e_1

  // "1^7 2^1 3^2"; the empty partition parses from and prints as "".
  static Partition parse(const std::string& text);
  std::string to_string() const;

  int multiplicity(int part) const;  // e_part, 0 outside support
  int max_part() const;              // 0 for the empty partition
  int length() const;                // number of parts
  long long weight() const;          // sum of parts

  std::vector<int> parts() const;            // weakly decreasing
  std::vector<int> conjugate_parts() const;  // column lengths, weakly decreasing
  Partition conjugate() const;

  // Sum over conjugate columns c of c*(c-1)/2.
  long long n_lambda() const;

  const std::vector<int>& multiplicities() const { return mult_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> mult_;  // mult_[i-1] = multiplicity of part i, trailing zeros trimmed
};

// Descending lexicographic order on part vectors: (3) before (2,1) before (1,1,1).
bool desc_lex_less(const Partition& a, const Partition& b);

struct PartitionDescLex {
  bool operator()(const Partition& a, const Partition& b) const { return desc_lex_less(a, b); }
};

// Visit every partition of `weight` with at most `max_len` parts, each part at
// most `max_part`, in descending lexicographic order.
void for_each_partition(int weight, int max_part, int max_len,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(int weight);
std::vector<Partition> partitions_in_box(int weight, int max_len, int max_part);

}  // namespace treebij
