#include "treebij/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "treebij/errors.hpp"

namespace treebij {

Partition Partition::from_parts(std::vector<int> parts) {
  Partition p;
  for (int part : parts) {
    if (part < 1) throw InputError("partition parts must be positive");
    if (part > static_cast<int>(p.mult_.size())) p.mult_.resize(part, 0);
    ++p.mult_[part - 1];
  }
  return p;
}

Partition Partition::from_multiplicities(std::vector<int> mult) {
  for (int m : mult)
    if (m < 0) throw InputError("negative multiplicity");
  Partition p;
  p.mult_ = std::move(mult);
  while (!p.mult_.empty() && p.mult_.back() == 0) p.mult_.pop_back();
  return p;
}

Partition Partition::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> parts;
  std::string token;
  while (in >> token) {
    int part = 0, mult = 1;
    auto caret = token.find('^');
    try {
      if (caret == std::string::npos) {
        part = std::stoi(token);
      } else {
        part = std::stoi(token.substr(0, caret));
        mult = std::stoi(token.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw InputError("bad partition token: " + token);
    }
    if (part < 1 || mult < 1) throw InputError("bad partition token: " + token);
    for (int i = 0; i < mult; ++i) parts.push_back(part);
  }
  return from_parts(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= static_cast<int>(mult_.size()); ++i) {
    if (mult_[i - 1] == 0) continue;
    if (!first) out << ' ';
    out << i << '^' << mult_[i - 1];
    first = false;
  }
  return out.str();
}

int Partition::multiplicity(int part) const {
  if (part < 1 || part > static_cast<int>(mult_.size())) return 0;
  return mult_[part - 1];
}

int Partition::max_part() const { return static_cast<int>(mult_.size()); }

int Partition::length() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

long long Partition::weight() const {
  long long w = 0;
  for (int i = 1; i <= static_cast<int>(mult_.size()); ++i) w += static_cast<long long>(i) * mult_[i - 1];
  return w;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (int i = static_cast<int>(mult_.size()); i >= 1; --i)
    out.insert(out.end(), mult_[i - 1], i);
  return out;
}

std::vector<int> Partition::conjugate_parts() const {
  std::vector<int> out;
  int column = length();  // number of parts >= 1
  for (int i = 1; i <= max_part(); ++i) {
    out.push_back(column);
    column -= mult_[i - 1];
  }
  return out;
}

Partition Partition::conjugate() const { return from_parts(conjugate_parts()); }

long long Partition::n_lambda() const {
  long long total = 0;
  for (int c : conjugate_parts()) total += static_cast<long long>(c) * (c - 1) / 2;
  return total;
}

bool desc_lex_less(const Partition& a, const Partition& b) {
  std::vector<int> pa = a.parts(), pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

namespace {

void visit_partitions(int remaining, int max_part, int slots_left, std::vector<int>& parts,
                      const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition::from_parts(parts));
    return;
  }
  if (slots_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    visit_partitions(remaining - part, part, slots_left - 1, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(int weight, int max_part, int max_len,
                        const std::function<void(const Partition&)>& visit) {
  if (weight < 0) throw InputError("negative partition weight");
  std::vector<int> parts;
  visit_partitions(weight, std::max(max_part, 0), std::max(max_len, 0), parts, visit);
}

std::vector<Partition> partitions_of(int weight) {
  return partitions_in_box(weight, weight, weight);
}

std::vector<Partition> partitions_in_box(int weight, int max_len, int max_part) {
  std::vector<Partition> out;
  for_each_partition(weight, max_part, max_len, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace treebij
