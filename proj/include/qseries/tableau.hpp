#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/partition.hpp"

namespace qseries {

// A semistandard tableau stored row by row.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  std::vector<int> content() const {
    std::vector<int> c;
    for (const auto& r : rows)
      for (int x : r) {
        if (x > static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(x), 0);
        ++c[static_cast<std::size_t>(x - 1)];
      }
    return c;
  }

  bool is_semistandard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[i][j] < 1) return false;
        if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
        if (i > 0 && (j >= rows[i - 1].size() || rows[i][j] <= rows[i - 1][j])) return false;
      }
    }
    return true;
  }

  // Rows read left to right, from the bottom row up.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }
};

// Semistandard tableaux of the given shape and content, built by adding the
// letters 1, 2, ... as horizontal strips.
inline std::vector<Tableau> semistandard_tableaux(const Partition& shape, const std::vector<int>& content) {
  std::vector<Tableau> out;
  int total = 0;
  for (int c : content) {
    if (c < 0) throw DomainError("tableau content must be nonnegative");
    total += c;
  }
  if (total != shape.weight()) return out;
  const int n = shape.length();
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  Tableau t;
  t.rows.resize(static_cast<std::size_t>(n));

  std::function<void(std::size_t)> letter = [&](std::size_t idx) {
    if (idx == content.size()) {
      out.push_back(t);
      return;
    }
    const std::vector<int> before = cur;
    std::function<void(int, int)> strip = [&](int row, int remaining) {
      if (row == n) {
        if (remaining == 0) letter(idx + 1);
        return;
      }
      const std::size_t r = static_cast<std::size_t>(row);
      // the new row end may not pass the old end of the row above
      const int cap = std::min(shape[row], row == 0 ? shape[0] : before[r - 1]);
      const int most = std::min(cap - before[r], remaining);
      for (int a = most; a >= 0; --a) {
        cur[r] = before[r] + a;
        t.rows[r].insert(t.rows[r].end(), static_cast<std::size_t>(a), static_cast<int>(idx) + 1);
        strip(row + 1, remaining - a);
        t.rows[r].resize(static_cast<std::size_t>(before[r]));
      }
      cur[r] = before[r];
    };
    strip(0, content[idx]);
  };
  letter(0);
  return out;
}

// Lascoux-Schutzenberger charge of a word with partition content: extract
// standard subwords by scanning leftwards cyclically for 1, 2, ...; the index
// rises by one whenever the next letter sits to the right of the previous.
inline int charge(std::vector<int> word) {
  int total = 0;
  while (!word.empty()) {
    const int n = static_cast<int>(word.size());
    std::vector<bool> used(word.size(), false);
    std::vector<int> picks;
    int cursor = n;
    for (int letter = 1;; ++letter) {
      int found = -1;
      for (int step = 0; step < n; ++step) {
        const int j = ((cursor - 1 - step) % n + n) % n;
        if (word[static_cast<std::size_t>(j)] == letter && !used[static_cast<std::size_t>(j)]) {
          found = j;
          break;
        }
      }
      if (found < 0) break;
      used[static_cast<std::size_t>(found)] = true;
      picks.push_back(found);
      cursor = found;
    }
    if (picks.empty()) throw DomainError("charge needs a word whose content is a partition");
    int index = 0;
    for (std::size_t t = 1; t < picks.size(); ++t) {
      if (picks[t] > picks[t - 1]) ++index;
      total += index;
    }
    std::vector<int> rest;
    for (std::size_t j = 0; j < word.size(); ++j)
      if (!used[j]) rest.push_back(word[j]);
    word = std::move(rest);
  }
  return total;
}

}  // namespace qseries
