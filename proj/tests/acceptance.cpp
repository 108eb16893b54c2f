// Acceptance suite: one line per criterion, exact comparisons throughout.
// Exits nonzero if any criterion fails.
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "treebij/counting.hpp"
#include "treebij/enumeration.hpp"
#include "treebij/genfun.hpp"
#include "treebij/phi.hpp"
#include "treebij/prufer_like.hpp"
#include "treebij/qseries.hpp"

using namespace treebij;

namespace {

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> check;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

CutEdgeMatrix matrix_of(std::vector<std::pair<int, int>> cols) {
  CutEdgeMatrix m;
  for (auto [top, bottom] : cols) m.columns.push_back({top, bottom});
  m.canonicalize();
  return m;
}

bool criterion_census_formula(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 7; ++n) {
    Census c = census(n, CensusVariant::local_unrooted);
    for (const Partition& lambda : partitions_of(n - 1)) {
      auto it = c.counts.find(lambda);
      BigInt counted = it == c.counts.end() ? BigInt(0) : it->second;
      ok &= expect(counted == count_trees_by_type(n, lambda),
                   "census mismatch at n=" + std::to_string(n) + " type " + lambda.to_string(),
                   detail);
    }
  }
  Census c4 = census(4, CensusVariant::local_unrooted);
  ok &= expect(c4.counts.at(Partition::parse("1^3")) == 6, "n=4 spot value 6", detail);
  ok &= expect(c4.counts.at(Partition::parse("1^1 2^1")) == 9, "n=4 spot value 9", detail);
  ok &= expect(c4.counts.at(Partition::parse("3^1")) == 1, "n=4 spot value 1", detail);
  Census c5 = census(5, CensusVariant::local_unrooted);
  ok &= expect(c5.counts.at(Partition::parse("2^2")) == 12, "n=5 spot value 12", detail);
  return ok;
}

bool criterion_rooted_counts(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 7; ++n) {
    Census local = census(n, CensusVariant::local_unrooted);
    for (int r = 1; r <= n; ++r) {
      Census rooted = census(n, CensusVariant::global_rooted, r);
      ok &= expect(rooted.counts == local.counts,
                   "rooted census depends on the root at n=" + std::to_string(n), detail);
    }
    for (const Partition& lambda : partitions_of(n - 1)) {
      auto it = local.counts.find(lambda);
      BigInt counted = it == local.counts.end() ? BigInt(0) : it->second;
      BigInt factored =
          count_set_partitions_by_type(n, lambda) * count_k_permutations(n, lambda.length());
      ok &= expect(counted == count_trees_by_type(n, lambda) && counted == factored,
                   "factorization mismatch at n=" + std::to_string(n) + " type " +
                       lambda.to_string(),
                   detail);
    }
  }
  return ok;
}

bool criterion_code_roundtrip(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 7 && ok; ++n) {
    for_each_tree(n, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        RootedTree rooted = hang_up(t, r);
        LeafGroupCode code = encode(rooted);
        ok &= expect(decode(code.partition, code.perm, r) == rooted &&
                         code.partition.type() == global_type(rooted),
                     "decode(encode) failed at n=" + std::to_string(n), detail);
      }
    });
  }
  // all valid pairs up to n = 6: counts of pairs and trees match, and
  // encode(decode(pair)) reproduces the pair
  std::function<void(const std::vector<int>&, std::size_t, std::vector<std::vector<int>>&,
                     const std::function<void(const std::vector<std::vector<int>>&)>&)>
      partitions = [&](const std::vector<int>& ground, std::size_t at,
                       std::vector<std::vector<int>>& blocks,
                       const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
        if (at == ground.size()) {
          visit(blocks);
          return;
        }
        const std::size_t existing = blocks.size();
        for (std::size_t b = 0; b < existing; ++b) {
          blocks[b].push_back(ground[at]);
          partitions(ground, at + 1, blocks, visit);
          blocks[b].pop_back();
        }
        blocks.push_back({ground[at]});
        partitions(ground, at + 1, blocks, visit);
        blocks.pop_back();
      };
  for (int n = 2; n <= 6 && ok; ++n) {
    for (int r = 1; r <= n && ok; ++r) {
      std::vector<int> ground;
      for (int v = 1; v <= n; ++v)
        if (v != r) ground.push_back(v);
      std::uint64_t pairs = 0;
      std::vector<std::vector<int>> blocks;
      partitions(ground, 0, blocks, [&](const std::vector<std::vector<int>>& raw) {
        SetPartition pi = SetPartition::from_blocks(n, r, raw);
        const int k = static_cast<int>(raw.size());
        std::vector<int> prefix;
        std::vector<bool> used(n + 1, false);
        std::function<void()> perms = [&] {
          if (static_cast<int>(prefix.size()) == k - 1) {
            prefix.push_back(r);
            KPermutation p = KPermutation::from_entries(n, prefix);
            RootedTree t = decode(pi, p, r);
            LeafGroupCode code = encode(t);
            ok &= expect(code.partition == pi && code.perm == p,
                         "encode(decode) failed at n=" + std::to_string(n), detail);
            ++pairs;
            prefix.pop_back();
            return;
          }
          for (int v = 1; v <= n; ++v) {
            if (used[v] || v == r) continue;
            used[v] = true;
            prefix.push_back(v);
            perms();
            prefix.pop_back();
            used[v] = false;
          }
        };
        perms();
      });
      // the code is onto: pair count equals tree count
      ok &= expect(pairs == tree_count(n),
                   "pair count mismatch at n=" + std::to_string(n), detail);
    }
  }
  return ok;
}

bool criterion_phi_roundtrip(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 7 && ok; ++n) {
    for_each_tree(n, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        RootedTree image = phi(t, r);
        bool good = local_type(t) == global_type(image) && phi_inverse(image) == t;
        if (good && n >= 2)
          good = edge_label_partition(t, r, Orientation::local) == child_groups(image);
        ok &= expect(good, "phi round trip failed at n=" + std::to_string(n), detail);
      }
    });
  }
  // golden fixture
  PhiTrace trace;
  RootedTree image = phi_traced(fixtures::tstar(), 6, trace);
  ok &= expect(trace.cut_matrix == matrix_of({{6, 2}, {6, 5}, {7, 1}, {8, 3},
                                              {9, 7}, {9, 8}, {12, 4}, {12, 10}}),
               "fixture cut matrix", detail);
  auto cycles = trace.sigma.nontrivial_cycles();
  ok &= expect(cycles.size() == 3 && cycles[0].elements == std::vector<int>{16, 3} &&
                   cycles[1].elements == std::vector<int>{11, 14, 13, 9, 6} &&
                   cycles[2].elements == std::vector<int>{12, 15, 8},
               "fixture chain cycles", detail);
  ok &= expect(trace.transported_matrix == matrix_of({{11, 2}, {11, 5}, {7, 1}, {12, 3},
                                                      {6, 7}, {6, 8}, {15, 4}, {15, 10}}),
               "fixture transported matrix", detail);
  ok &= expect(global_type(image) == Partition::parse("1^7 2^1 3^2") &&
                   local_type(fixtures::tstar()) == Partition::parse("1^7 2^1 3^2"),
               "fixture indegree type", detail);
  ok &= expect(phi_inverse(image) == fixtures::tstar(), "fixture inverse", detail);
  return ok;
}

bool criterion_matrix_transport(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 6 && ok; ++n) {
    for_each_tree(n, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        PhiTrace trace;
        RootedTree image = phi_traced(t, r, trace);
        ProperEdgeCut cut = cut_proper_edges(image);
        ok &= expect(cut.matrix == trace.transported_matrix,
                     "proper-edge matrix transport failed at n=" + std::to_string(n), detail);
      }
    });
  }
  return ok;
}

bool criterion_q_identities(std::string& detail) {
  bool ok = true;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int p = 0; p <= 3; ++p)
        for (int l = 0; l <= 3; ++l) {
          QCheckResult r = thm4_check(m, n, p, l);
          ok &= expect(r.equal(), "main q-identity failed", detail);
          auto [ilhs, irhs] = check_identity_general(m, n, p, l);
          ok &= expect(BigInt(n) * r.lhs.eval_at_one() == ilhs &&
                           BigInt(n) * r.rhs.eval_at_one() == irhs,
                       "q = 1 specialization mismatch", detail);
        }
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k)
      ok &= expect(eq_lemma_check(n, k).equal(), "two-parameter q-identity failed", detail);
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m <= 7; ++m)
      for (int p = 0; p <= 3; ++p)
        for (int l = 0; l <= 3; ++l)
          ok &= expect(eq_simple_check(n, m, p, l).equal(), "q-summation identity failed",
                       detail);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for_each_partition(m - 1, m - 1, n, [&](const Partition& lambda) {
        std::vector<int> e = multiplicities_with_e0(lambda, n);
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
          if (e[i] > 0)
            ok &= expect(bridge_check(n, e, i).equal(), "bridge identity failed", detail);
      });
  return ok;
}

bool criterion_integer_identities(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 10; ++n) {
    auto [lhs, rhs] = check_identity_second(n);
    ok &= expect(lhs == rhs, "second identity failed at n=" + std::to_string(n), detail);
  }
  {
    auto [lhs, rhs] = check_identity_second(4);
    ok &= expect(rhs == 21, "second identity n=4 right side is 21", detail);
  }
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n)
      for (int p = 0; p <= 3; ++p)
        for (int l = 0; l <= 3; ++l) {
          auto [lhs, rhs] = check_identity_general(m, n, p, l);
          ok &= expect(lhs == rhs, "general identity failed", detail);
        }
  // pinned normalization: the two-variable identity at (n, n, 2, 1) is n
  // times the single-variable one
  for (int n = 1; n <= 8; ++n) {
    auto [slhs, srhs] = check_identity_second(n);
    auto [glhs, grhs] = check_identity_general(n, n, 2, 1);
    ok &= expect(glhs == BigInt(n) * slhs && grhs == BigInt(n) * srhs,
                 "normalization between the identities", detail);
  }
  return ok;
}

bool criterion_genfun(std::string& detail) {
  bool ok = true;
  for (int n = 2; n <= 7; ++n)
    ok &= expect(expand_product(n) == genfun_from_enumeration(n),
                 "expansion!=enumeration at n=" + std::to_string(n), detail);
  MultiPoly p4 = expand_product(4);
  ok &= expect(p4.terms.size() == 5 && p4.terms.at({0, 1, 1, 1}) == 6 &&
                   p4.terms.at({0, 1, 0, 2}) == 2 && p4.terms.at({0, 0, 2, 1}) == 3 &&
                   p4.terms.at({0, 0, 1, 2}) == 4 && p4.terms.at({0, 0, 0, 3}) == 1,
               "printed n=4 polynomial", detail);
  for (int n = 2; n <= 7; ++n)
    for (const Partition& lambda : partitions_of(n - 1))
      ok &= expect(type_coefficient_sum(n, lambda) == count_trees_by_type(n, lambda),
                   "type-grouped sum mismatch at n=" + std::to_string(n), detail);
  return ok;
}

bool criterion_durfee(std::string& detail) {
  const int m = 4, n = 4, p = 2, l = 1;
  bool ok = true;
  std::map<std::pair<int, std::vector<int>>, QPolynomial> groups;
  int total = 0;
  for (int w = 0; w <= (m - 1 - l) * (n - 1 + p); ++w)
    for (const Partition& lambda : partitions_in_box(w, m - 1 - l, n - 1 + p)) {
      auto d = durfee_decompose(BoxedPartition::in_box(lambda, m - 1 - l, n - 1 + p), m, n, p, l);
      ok &= expect(durfee_recompose(d, m, n, p, l) == lambda, "recompose failed", detail);
      groups[{d.index, d.squares}] += QPolynomial::monomial(1, w);
      ++total;
    }
  ok &= expect(total == 21, "rectangle holds 21 partitions", detail);

  QPolynomial regrouped;
  int matched_terms = 0;
  for_each_partition(m - 1, m - 1, n, [&](const Partition& lambda) {
    for (int i = 0; i <= lambda.max_part(); ++i) {
      QPolynomial term = multisum_term(lambda, i, m, n, p, l);
      if (term.is_zero()) continue;
      auto conj = lambda.conjugate_parts();
      std::vector<int> squares;
      for (int k = 0; k < static_cast<int>(conj.size()); ++k) {
        int column = conj[k] - (k < i ? 1 : 0);
        if (column > 0) squares.push_back(column);
      }
      auto it = groups.find({i, squares});
      ok &= expect(it != groups.end() && it->second == term &&
                       it->second == durfee_group_polynomial(i, squares, m, n, p, l),
                   "group does not match its multisum term", detail);
      ++matched_terms;
    }
  });
  ok &= expect(matched_terms == static_cast<int>(groups.size()),
               "every group corresponds to one multisum term", detail);
  QPolynomial sum;
  for (const auto& [key, weight] : groups) sum += weight;
  ok &= expect(sum == q_binomial(7, 2), "regrouped total equals the Gaussian binomial", detail);
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 census equals the product formula (n <= 7)", criterion_census_formula},
      {"2 rooted censuses are root-independent and factor (n <= 7)", criterion_rooted_counts},
      {"3 leaf-group code round trips (n <= 7; pairs n <= 6)", criterion_code_roundtrip},
      {"4 phi round trips, preserves types and partitions (n <= 7)", criterion_phi_roundtrip},
      {"5 proper-edge matrix equals the transported cut matrix (n <= 6)",
       criterion_matrix_transport},
      {"6 q-identities hold on their grids", criterion_q_identities},
      {"7 integer identities hold on their grids", criterion_integer_identities},
      {"8 generating function matches enumeration and the formula (n <= 7)", criterion_genfun},
      {"9 box decomposition regroups the Gaussian binomial", criterion_durfee},
  };
  int failures = 0;
  for (auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("PASS criterion %s\n", criterion.label.c_str());
    } else {
      ++failures;
      std::printf("FAIL criterion %s (%s)\n", criterion.label.c_str(), detail.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
