// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's enumeration/ranking/typicality code paths: products are
// taken directly along each sequence, lengths come from cumulative capacity
// counts, and Huffman is built from scratch.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <queue>
#include <utility>
#include <vector>

#include "fockzip/source.hpp"

namespace oracles {

// All d^n index sequences in lexicographic order, probability = direct
// left-to-right product of eigenvalues (no sorting, no type-class grouping).
inline std::vector<std::pair<fockzip::IndexSequence, double>> product_distribution(
    const std::vector<double>& eigenvalues, int letter_count) {
  const int d = static_cast<int>(eigenvalues.size());
  std::vector<std::pair<fockzip::IndexSequence, double>> out;
  fockzip::IndexSequence seq(static_cast<std::size_t>(letter_count), 0);
  while (true) {
    double p = 1.0;
    for (std::uint8_t index : seq) {
      p *= eigenvalues[index];
    }
    out.emplace_back(seq, p);
    int pos = letter_count - 1;
    for (; pos >= 0; --pos) {
      if (++seq[static_cast<std::size_t>(pos)] < d) {
        break;
      }
      seq[static_cast<std::size_t>(pos)] = 0;
    }
    if (pos < 0) {
      break;
    }
  }
  return out;
}

// Typical membership by the displayed inequality, on the direct product.
inline std::vector<fockzip::IndexSequence> typical_members(
    const std::vector<double>& eigenvalues, int letter_count, double epsilon) {
  const double entropy = fockzip::shannon_entropy(eigenvalues);
  std::vector<fockzip::IndexSequence> members;
  for (const auto& [seq, p] : product_distribution(eigenvalues, letter_count)) {
    if (p <= 0.0) {
      continue;
    }
    if (std::abs(-std::log2(p) / letter_count - entropy) <= epsilon) {
      members.push_back(seq);
    }
  }
  return members;
}

// Codeword length via cumulative capacity counts: 2 words of length 1, 4 of
// length 2, ..., so rank i has the smallest l with 2^(l+1) - 2 >= i.
inline int capacity_count_length(std::uint64_t rank) {
  int length = 1;
  while ((std::uint64_t{1} << (length + 1)) - 2 < rank) {
    ++length;
  }
  return length;
}

// Expected length of an optimal binary prefix code for the distribution.
inline double huffman_average_length(std::vector<double> probabilities) {
  if (probabilities.size() < 2) {
    return 0.0;
  }
  // (subtree expected depth contribution, total probability)
  using Node = std::pair<double, double>;
  auto cmp = [](const Node& a, const Node& b) { return a.second > b.second; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  for (double p : probabilities) {
    heap.push({0.0, p});
  }
  double total = 0.0;
  while (heap.size() > 1) {
    Node a = heap.top();
    heap.pop();
    Node b = heap.top();
    heap.pop();
    const double merged = a.second + b.second;
    total += merged;
    heap.push({0.0, merged});
  }
  return total;
}

inline fockzip::EigenDecomposition eigenbasis_for_theta_degrees(double degrees) {
  const double radians = degrees * std::numbers::pi / 180.0;
  return fockzip::diagonalize(
      fockzip::density_matrix(fockzip::two_state_ensemble(radians)));
}

}  // namespace oracles
