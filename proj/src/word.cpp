#include "mzv/word.hpp"

#include <algorithm>
#include <utility>

#include "mzv/errors.hpp"

namespace mzv {

Word index_to_word(const Index& k) {
  if (k.empty()) fail(Errc::domain, "index_to_word: empty index");
  Word w;
  for (auto it = k.rbegin(); it != k.rend(); ++it) {
    if (*it < 1) fail(Errc::domain, "index_to_word: entries must be >= 1");
    w.append(static_cast<size_t>(*it - 1), 'x');
    w.push_back('y');
  }
  return w;
}

Index word_to_index(const Word& w) {
  if (w.empty()) fail(Errc::domain, "word_to_index: empty word");
  Index rev;  // entries in word order: k_n first
  int run = 0;
  for (char c : w) {
    if (c == 'x') {
      ++run;
    } else if (c == 'y') {
      rev.push_back(run + 1);
      run = 0;
    } else {
      fail(Errc::domain, "word_to_index: letters must be 'x' or 'y'");
    }
  }
  if (run != 0) fail(Errc::domain, "word_to_index: word must end in 'y'");
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Word dual_word(const Word& w) {
  Word d(w.rbegin(), w.rend());
  for (char& c : d) {
    if (c == 'x')
      c = 'y';
    else if (c == 'y')
      c = 'x';
    else
      fail(Errc::domain, "dual_word: letters must be 'x' or 'y'");
  }
  return d;
}

namespace {

using ShuffleMap = std::map<Word, std::int64_t>;

const ShuffleMap& shuffle_memo(const Word& u, const Word& v) {
  // Recursion: u ⧢ ε = {u}, ε ⧢ v = {v},
  // (a·u') ⧢ (b·v') = a·(u' ⧢ b·v') + b·(a·u' ⧢ v').
  static std::map<std::pair<Word, Word>, ShuffleMap> memo;
  auto key = std::make_pair(u, v);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  ShuffleMap out;
  if (u.empty()) {
    out[v] = 1;
  } else if (v.empty()) {
    out[u] = 1;
  } else {
    const ShuffleMap& left = shuffle_memo(u.substr(1), v);
    for (const auto& [w, c] : left) out[u[0] + w] += c;
    const ShuffleMap& right = shuffle_memo(u, v.substr(1));
    for (const auto& [w, c] : right) out[v[0] + w] += c;
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

ShuffleMap shuffle_words(const Word& u, const Word& v) {
  for (char c : u)
    if (c != 'x' && c != 'y') fail(Errc::domain, "shuffle: bad letter");
  for (char c : v)
    if (c != 'x' && c != 'y') fail(Errc::domain, "shuffle: bad letter");
  return shuffle_memo(u, v);
}

}  // namespace mzv
