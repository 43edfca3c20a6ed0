#include "liegrowth/wordtable.hpp"

#include <stdexcept>
#include <string>

#include "liegrowth/lyndon.hpp"

namespace liegrowth {

namespace {
constexpr std::size_t kMaxWordsPerDegree = std::size_t(1) << 26;
}

WordTable::WordTable(const GradedAlphabet& alpha, long max_degree)
    : alpha_(&alpha), max_degree_(max_degree), nletters_(alpha.size()) {
  if (max_degree < 0) throw std::invalid_argument("negative degree cap");
  if (nletters_ > 255) throw std::invalid_argument("alphabet too large for the engine");
  packed_ = alpha.min_letter_degree() == 1 && alpha.max_letter_degree() == 1;

  const std::size_t N = static_cast<std::size_t>(max_degree);
  counts_.assign(N + 1, 0);
  if (packed_) {
    pow_.assign(N + 1, 1);
    for (std::size_t n = 1; n <= N; ++n) {
      pow_[n] = pow_[n - 1] * nletters_;
      if (pow_[n] > kMaxWordsPerDegree) throw std::invalid_argument("degree cap too large for the engine");
      counts_[n] = pow_[n];
    }
    counts_[0] = 1;
  } else {
    flat_.resize(N + 1);
    starts_.resize(N + 1);
    index_.resize(N + 1);
    // enumerate words of each degree by extending shorter ones letter by
    // letter on the right; ids follow enumeration order
    counts_[0] = 1;
    starts_[0] = {0, 0};
    index_[0].emplace("", 0);
    for (std::size_t n = 1; n <= N; ++n) {
      auto& flat = flat_[n];
      auto& starts = starts_[n];
      starts.push_back(0);
      for (std::uint32_t c = 0; c < nletters_; ++c) {
        long d = alpha.degree_of(c);
        if (static_cast<long>(n) < d) continue;
        std::size_t m = n - static_cast<std::size_t>(d);
        for (std::size_t id = 0; id < counts_[m]; ++id) {
          std::uint32_t off = starts_[m][id], end = starts_[m][id + 1];
          for (std::uint32_t p = off; p < end; ++p) flat.push_back(flat_[m][p]);
          flat.push_back(static_cast<std::uint8_t>(c));
          starts.push_back(static_cast<std::uint32_t>(flat.size()));
        }
      }
      counts_[n] = starts.size() - 1;
      if (counts_[n] > kMaxWordsPerDegree) throw std::invalid_argument("degree cap too large for the engine");
      index_[n].reserve(counts_[n]);
      for (std::size_t id = 0; id < counts_[n]; ++id) {
        std::string key(reinterpret_cast<const char*>(flat.data()) + starts[id], starts[id + 1] - starts[id]);
        index_[n].emplace(std::move(key), static_cast<std::uint32_t>(id));
      }
    }
  }

  // LS-word frame per degree, descending order
  ls_ids_.resize(N + 1);
  ls_col_.resize(N + 1);
  std::vector<std::vector<Word>> buckets(N + 1);
  if (max_degree >= 1)
    for_each_ls_word(alpha, max_degree,
                     [&](const Word& w) { buckets[static_cast<std::size_t>(w.degree())].push_back(w); });
  for (std::size_t n = 1; n <= N; ++n) {
    ls_col_[n].assign(counts_[n], -1);
    ls_ids_[n].reserve(buckets[n].size());
    for (const Word& w : buckets[n]) {
      std::uint32_t id = id_of(w);
      ls_col_[n][id] = static_cast<long>(ls_ids_[n].size());
      ls_ids_[n].push_back(id);
    }
  }
}

void WordTable::check_degree(long degree) const {
  if (degree < 0 || degree > max_degree_) throw std::out_of_range("degree outside the table");
}

std::size_t WordTable::count(long degree) const {
  check_degree(degree);
  return counts_[static_cast<std::size_t>(degree)];
}

Word WordTable::word(long degree, std::uint32_t id) const {
  check_degree(degree);
  std::vector<std::uint32_t> letters;
  if (packed_) {
    letters.resize(static_cast<std::size_t>(degree));
    std::size_t v = id;
    for (std::size_t i = letters.size(); i-- > 0;) {
      letters[i] = static_cast<std::uint32_t>(v % nletters_);
      v /= nletters_;
    }
  } else {
    const auto& starts = starts_[static_cast<std::size_t>(degree)];
    const auto& flat = flat_[static_cast<std::size_t>(degree)];
    for (std::uint32_t p = starts[id]; p < starts[id + 1]; ++p) letters.push_back(flat[p]);
  }
  return Word(alpha_, std::move(letters));
}

std::uint32_t WordTable::id_of(const Word& w) const {
  check_degree(w.degree());
  if (packed_) {
    std::size_t v = 0;
    for (auto l : w.letters()) v = v * nletters_ + l;
    return static_cast<std::uint32_t>(v);
  }
  std::string key;
  key.reserve(w.length());
  for (auto l : w.letters()) key.push_back(static_cast<char>(l));
  const auto& idx = index_[static_cast<std::size_t>(w.degree())];
  auto it = idx.find(key);
  if (it == idx.end()) throw std::logic_error("word missing from table");
  return it->second;
}

std::uint32_t WordTable::concat(long dl, std::uint32_t l, long dr, std::uint32_t r) const {
  check_degree(dl + dr);
  if (packed_)
    return static_cast<std::uint32_t>(static_cast<std::size_t>(l) * pow_[static_cast<std::size_t>(dr)] + r);
  const auto& sl = starts_[static_cast<std::size_t>(dl)];
  const auto& sr = starts_[static_cast<std::size_t>(dr)];
  const auto& fl = flat_[static_cast<std::size_t>(dl)];
  const auto& fr = flat_[static_cast<std::size_t>(dr)];
  std::string key;
  key.reserve((sl[l + 1] - sl[l]) + (sr[r + 1] - sr[r]));
  for (std::uint32_t p = sl[l]; p < sl[l + 1]; ++p) key.push_back(static_cast<char>(fl[p]));
  for (std::uint32_t p = sr[r]; p < sr[r + 1]; ++p) key.push_back(static_cast<char>(fr[p]));
  auto it = index_[static_cast<std::size_t>(dl + dr)].find(key);
  if (it == index_[static_cast<std::size_t>(dl + dr)].end()) throw std::logic_error("concat missing from table");
  return it->second;
}

std::size_t WordTable::ls_count(long degree) const {
  check_degree(degree);
  return ls_ids_[static_cast<std::size_t>(degree)].size();
}

std::uint32_t WordTable::ls_word_id(long degree, std::size_t column) const {
  check_degree(degree);
  return ls_ids_[static_cast<std::size_t>(degree)].at(column);
}

long WordTable::ls_column(long degree, std::uint32_t word_id) const {
  check_degree(degree);
  return ls_col_[static_cast<std::size_t>(degree)][word_id];
}

Word WordTable::ls_word(long degree, std::size_t column) const {
  return word(degree, ls_word_id(degree, column));
}

}  // namespace liegrowth
