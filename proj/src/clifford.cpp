#include "gelfand/clifford.hpp"

#include <array>
#include <functional>

#include "gelfand/classical.hpp"

namespace gelfand {

namespace {

// Letters: 0 = identity, 1 = sigma_x, 2 = sigma_z, 3 = i sigma_y.
Matrix letter(int code) {
  Matrix m(2, 2);
  switch (code) {
    case 0: m(0, 0) = 1; m(1, 1) = 1; break;
    case 1: m(0, 1) = 1; m(1, 0) = 1; break;
    case 2: m(0, 0) = 1; m(1, 1) = -1; break;
    default: m(0, 1) = 1; m(1, 0) = -1; break;
  }
  return m;
}

using Word = std::vector<int>;

bool anticommute(const Word& a, const Word& b) {
  int flips = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0 && a[i] != b[i]) ++flips;
  return flips % 2 == 1;
}

}  // namespace

std::vector<Matrix> clifford_generators(std::size_t count, std::size_t factors) {
  // Symmetric words with square 1: an even number of i sigma_y letters.
  std::vector<Word> words;
  std::size_t total = 1;
  for (std::size_t i = 0; i < factors; ++i) total *= 4;
  for (std::size_t code = 1; code < total; ++code) {
    Word w(factors);
    std::size_t c = code, ys = 0;
    for (std::size_t i = 0; i < factors; ++i) {
      w[factors - 1 - i] = static_cast<int>(c % 4);
      ys += w[factors - 1 - i] == 3;
      c /= 4;
    }
    if (ys % 2 == 0) words.push_back(w);
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (chosen.size() == count) return true;
    for (std::size_t i = from; i < words.size(); ++i) {
      bool ok = true;
      for (std::size_t j : chosen) ok = ok && anticommute(words[i], words[j]);
      if (!ok) continue;
      chosen.push_back(i);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) throw GelfandError(ErrorKind::UnsupportedSize, "no anticommuting family of that size");
  std::vector<Matrix> out;
  for (std::size_t i : chosen) {
    Matrix m = letter(words[i][0]);
    for (std::size_t f = 1; f < factors; ++f) m = kronecker(m, letter(words[i][f]));
    out.push_back(m);
  }
  return out;
}

std::vector<Matrix> spin_matrices(const std::vector<Matrix>& generators) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b) out.push_back(generators[a] * generators[b]);
  return out;
}

SubalgebraEmbedding spin9_in_so16() {
  auto so16 = share(form_preserving_algebra(Matrix::identity(16)));
  return embed_matrices(so16, spin_matrices(clifford_generators(9, 4)));
}

}  // namespace gelfand
