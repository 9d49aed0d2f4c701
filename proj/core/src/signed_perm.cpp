#include "lcurve/signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lcurve/errors.hpp"

namespace lcurve {

namespace {

void require_same_size(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("signed permutations of sizes " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()));
  }
}

void require_weyl(const SignedPermutation& q, const char* op) {
  if (!q.in_weyl_group()) {
    throw DomainError(std::string(op) + ": " + q.to_string() + " has determinant -1");
  }
}

int permutation_parity(std::span<const int> word) {
  int inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t k = i + 1; k < word.size(); ++k) {
      if (std::abs(word[i]) > std::abs(word[k])) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
  const int m = size();
  if (m == 0) throw DomainError("signed permutation must have positive size");
  std::vector<bool> seen(m + 1, false);
  for (int v : word_) {
    const int col = std::abs(v);
    if (col < 1 || col > m || seen[col]) {
      throw DomainError("word is not a signed permutation of 1.." + std::to_string(m));
    }
    seen[col] = true;
  }
}

SignedPermutation SignedPermutation::identity(int m) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::antidiagonal(int m) {
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) w[i - 1] = (i % 2 == 1 ? 1 : -1) * (m + 1 - i);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::alternating_diagonal(int m) {
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) w[i - 1] = (i % 2 == 1 ? 1 : -1) * i;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::diagonal(std::span<const int> signs) {
  std::vector<int> w(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw DomainError("diagonal signs must be +-1");
    w[i] = signs[i] * static_cast<int>(i + 1);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::from_matrix(const Eigen::MatrixXi& entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw ParseError("signed permutation matrix must be square and nonempty");
  }
  const int m = static_cast<int>(entries.rows());
  std::vector<int> w(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int v = entries(i, j);
      if (v == 0) continue;
      if ((v != 1 && v != -1) || w[i] != 0) {
        throw ParseError("row " + std::to_string(i + 1) + " is not a signed unit row");
      }
      w[i] = v * (j + 1);
    }
    if (w[i] == 0) throw ParseError("row " + std::to_string(i + 1) + " is zero");
  }
  try {
    return SignedPermutation(std::move(w));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int SignedPermutation::determinant() const {
  int sign_product = 1;
  for (int v : word_) sign_product *= (v < 0 ? -1 : 1);
  return sign_product * permutation_parity(word_);
}

bool SignedPermutation::is_diagonal() const {
  for (int i = 1; i <= size(); ++i) {
    if (column(i) != i) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 1; i <= size(); ++i) w[column(i) - 1] = sign(i) * i;
  return SignedPermutation(std::move(w));
}

Eigen::MatrixXi SignedPermutation::to_int_matrix() const {
  Eigen::MatrixXi out = Eigen::MatrixXi::Zero(size(), size());
  for (int i = 1; i <= size(); ++i) out(i - 1, column(i) - 1) = sign(i);
  return out;
}

Eigen::MatrixXd SignedPermutation::to_matrix() const { return to_int_matrix().cast<double>(); }

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word_[i]);
  }
  return out + "]";
}

std::uint64_t SignedPermutation::key() const {
  std::uint64_t k = 0;
  for (int v : word_) k = (k << 5) | static_cast<std::uint64_t>(v + 16);
  return k;
}

DiagonalSigns::DiagonalSigns(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw DomainError("diagonal must have positive size");
  int product = 1;
  for (int v : signs_) {
    if (v != 1 && v != -1) throw DomainError("diagonal signs must be +-1");
    product *= v;
  }
  if (product != 1) throw DomainError("diagonal signs must have product +1");
}

DiagonalSigns DiagonalSigns::identity(int m) { return DiagonalSigns(std::vector<int>(m, 1)); }

int DiagonalSigns::trace() const { return std::accumulate(signs_.begin(), signs_.end(), 0); }

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  require_same_size(p, q);
  std::vector<int> w(p.size());
  for (int i = 1; i <= p.size(); ++i) w[i - 1] = p.sign(i) * q.word()[p.column(i) - 1];
  return SignedPermutation(std::move(w));
}

SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& q) {
  return compose(p, q);
}

int ne(const SignedPermutation& q, int i, int j) {
  if (i < 1 || i > q.size() || q.column(i) != j) {
    throw DomainError("(" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a nonzero position of " + q.to_string());
  }
  int count = 0;
  for (int r = 1; r < i; ++r) {
    if (q.column(r) > j) ++count;
  }
  return count;
}

int sw(const SignedPermutation& q, int i, int j) { return ne(q.transpose(), j, i); }

std::vector<int> delta_signs(const SignedPermutation& q) {
  std::vector<int> out(q.size());
  for (int i = 1; i <= q.size(); ++i) {
    out[i - 1] = q.sign(i) * (ne(q, i, q.column(i)) % 2 == 0 ? 1 : -1);
  }
  return out;
}

DiagonalSigns delta(const SignedPermutation& q) {
  require_weyl(q, "delta");
  return DiagonalSigns(delta_signs(q));
}

int s_value(const SignedPermutation& q) { return delta(q).trace(); }

SignedPermutation tr(const SignedPermutation& q) {
  std::vector<int> w(q.size());
  for (int i = 1; i <= q.size(); ++i) {
    const int j = q.column(i);
    const int parity = (i + j) % 2 == 0 ? 1 : -1;
    w[j - 1] = parity * q.sign(i) * i;
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation ad(const SignedPermutation& q) {
  const int m = q.size();
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) {
    const int j = q.column(i);
    const int parity = (i + j) % 2 == 0 ? 1 : -1;
    w[m - i] = parity * q.sign(i) * (m + 1 - j);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation tr_by_conjugation(const SignedPermutation& q) {
  const auto j = SignedPermutation::alternating_diagonal(q.size());
  return j * q.transpose() * j;
}

SignedPermutation ad_by_conjugation(const SignedPermutation& q) {
  const auto a = SignedPermutation::antidiagonal(q.size());
  return a.transpose() * q * a;
}

SignedPermutation chop_rep(const SignedPermutation& q) {
  return delta(q).to_permutation() * SignedPermutation::antidiagonal(q.size());
}

int cell_dimension(const SignedPermutation& q) {
  int inversions = 0;
  for (int i = 1; i <= q.size(); ++i) {
    for (int k = i + 1; k <= q.size(); ++k) {
      if (q.column(i) > q.column(k)) ++inversions;
    }
  }
  return inversions;
}

DiagonalRepresentative make_M(int m, int s) {
  if (m < 1 || std::abs(s) > m || (m - s) % 2 != 0) {
    throw DomainError("make_M requires |s| <= m and s = m mod 2 (m=" + std::to_string(m) +
                      ", s=" + std::to_string(s) + ")");
  }
  const int negatives = (m - s) / 2;
  std::vector<int> signs(m, 1);
  std::fill(signs.begin(), signs.begin() + negatives, -1);
  const int residue = ((m - s) % 4 + 4) % 4;
  return {SignedPermutation::diagonal(signs), residue == 0};
}

long long weyl_group_order(int m) {
  long long order = 1;
  for (int i = 2; i <= m; ++i) order *= i;
  return order << (m - 1);
}

void for_each_D(int m, const std::function<void(const SignedPermutation&)>& visit, bool force) {
  if (m < 1) throw DomainError("group size must be positive");
  if (m > kEnumerationGuard && !force) {
    throw GuardExceeded("enumeration of D_" + std::to_string(m) + " exceeds the size guard " +
                        std::to_string(kEnumerationGuard) + "; pass force to override");
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> word(m);
  do {
    const int parity = permutation_parity(perm);
    for (std::uint32_t pattern = 0; pattern < (1u << m); ++pattern) {
      const int sign_product = std::popcount(pattern) % 2 == 0 ? 1 : -1;
      if (sign_product * parity != 1) continue;
      for (int i = 0; i < m; ++i) word[i] = (pattern >> i & 1u) ? -perm[i] : perm[i];
      visit(SignedPermutation(word));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPermutation> enumerate_D(int m, bool force) {
  std::vector<SignedPermutation> out;
  if (m >= 1 && m <= kEnumerationGuard) out.reserve(static_cast<std::size_t>(weyl_group_order(m)));
  for_each_D(m, [&](const SignedPermutation& q) { out.push_back(q); }, force);
  return out;
}

std::vector<DiagonalSigns> enumerate_diagonals(int m) {
  std::vector<DiagonalSigns> out;
  for (std::uint32_t pattern = 0; pattern < (1u << m); ++pattern) {
    if (std::popcount(pattern) % 2 != 0) continue;
    std::vector<int> signs(m);
    for (int i = 0; i < m; ++i) signs[i] = (pattern >> i & 1u) ? -1 : 1;
    out.emplace_back(std::move(signs));
  }
  return out;
}

SignedPermutation parse_signed_word(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("signed word must look like [2,-1,3]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> word;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    if (token.empty()) throw ParseError("empty entry in signed word");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(std::string(token), &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + std::string(token) + "' in signed word");
    }
    if (used != token.size()) throw ParseError("bad integer '" + std::string(token) + "'");
    word.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw ParseError("trailing comma in signed word");
  }
  try {
    return SignedPermutation(std::move(word));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SignedPermutation parse_signed_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("bad matrix entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto m = static_cast<Eigen::Index>(rows.size());
  if (m == 0) throw ParseError("empty matrix");
  Eigen::MatrixXi entries(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != m) throw ParseError("matrix is not square");
    for (Eigen::Index j = 0; j < m; ++j) entries(i, j) = rows[i][j];
  }
  return SignedPermutation::from_matrix(entries);
}

}  // namespace lcurve
