#include "ado/free_nilpotent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "ado/error.hpp"

namespace ado {

std::vector<HallWord> hall_basis(std::size_t rank, std::size_t nilpotency_class) {
  std::vector<HallWord> words;
  if (nilpotency_class == 0) return words;
  for (std::size_t g = 0; g < rank; ++g) {
    HallWord w;
    w.index = g;
    w.generator = g;
    w.label = "g" + std::to_string(g + 1);
    words.push_back(std::move(w));
  }
  for (std::size_t d = 2; d <= nilpotency_class; ++d) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t existing = words.size();
    for (std::size_t u = 0; u < existing; ++u)
      for (std::size_t v = 0; v < u; ++v) {
        if (words[u].degree + words[v].degree != d) continue;
        if (!words[u].generator && words[u].right > v) continue;
        pairs.emplace_back(u, v);
      }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [u, v] : pairs) {
      HallWord w;
      w.index = words.size();
      w.degree = d;
      w.left = u;
      w.right = v;
      w.label = "[" + words[u].label + "," + words[v].label + "]";
      words.push_back(std::move(w));
    }
  }
  return words;
}

namespace {

int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

mpz_class witt_exact(std::size_t rank, std::size_t degree) {
  mpz_class sum = 0;
  for (std::size_t e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), rank, degree / e);
    sum += mu * power;
  }
  return sum / static_cast<unsigned long>(degree);
}

std::uint64_t saturate(const mpz_class& value) {
  if (!value.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return value.get_ui();
}

// Expresses brackets of Hall words in the Hall basis, truncating every
// bracket of total degree above the class.
class HallRewriter {
 public:
  HallRewriter(const std::vector<HallWord>& words, std::size_t nilpotency_class)
      : words_(words), class_(nilpotency_class) {
    for (const auto& w : words_)
      if (!w.generator) index_of_[{w.left, w.right}] = w.index;
  }

  SparseVector rewrite(std::size_t u, std::size_t v) {
    if (u == v || words_[u].degree + words_[v].degree > class_) return {};
    if (u < v) return scaled(rewrite(v, u), -1);
    auto key = std::make_pair(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SparseVector result;
    if (words_[u].generator || words_[u].right <= v) {
      result = {{index_of_.at(key), Rational(1)}};
    } else {
      // [[a,b],v] = [[a,v],b] + [a,[b,v]] with b > v.
      const std::size_t a = words_[u].left;
      const std::size_t b = words_[u].right;
      result = combine(rewrite(a, v), {{b, Rational(1)}});
      result = axpy(result, 1, combine({{a, Rational(1)}}, rewrite(b, v)));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  SparseVector combine(const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) out = axpy(out, a * b, rewrite(i, j));
    return out;
  }

  const std::vector<HallWord>& words_;
  std::size_t class_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_of_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> memo_;
};

std::uint64_t free_dimension(std::size_t rank, std::size_t nilpotency_class) {
  mpz_class total = 0;
  for (std::size_t d = 1; d <= nilpotency_class; ++d) total += witt_exact(rank, d);
  return saturate(total);
}

LieAlgebra build_free(const std::vector<HallWord>& words, std::size_t rank,
                      std::size_t nilpotency_class) {
  HallRewriter rewriter(words, nilpotency_class);
  std::vector<Bracket> brackets;
  std::vector<std::string> labels;
  Grading grading;
  for (std::size_t i = 0; i < words.size(); ++i) {
    labels.push_back(words[i].label);
    grading.degree.push_back(static_cast<unsigned>(words[i].degree));
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      SparseVector r = rewriter.rewrite(i, j);
      if (!r.empty()) brackets.push_back({i, j, std::move(r)});
    }
  }
  return LieAlgebra(words.size(), brackets, std::move(labels), std::move(grading),
                    "free" + std::to_string(rank) + "_" + std::to_string(nilpotency_class));
}

}  // namespace

std::uint64_t witt_dimension(std::size_t rank, std::size_t degree) {
  if (degree == 0) return 0;
  return saturate(witt_exact(rank, degree));
}

LieAlgebra free_nilpotent(std::size_t rank, std::size_t nilpotency_class, std::size_t budget) {
  std::uint64_t dim = free_dimension(rank, nilpotency_class);
  if (dim > budget)
    throw Error(ErrorKind::BudgetExceeded, "free nilpotent algebra of rank " + std::to_string(rank) +
                                               " and class " + std::to_string(nilpotency_class) +
                                               " has dimension " + std::to_string(dim) +
                                               " above the budget " + std::to_string(budget));
  return build_free(hall_basis(rank, nilpotency_class), rank, nilpotency_class);
}

Presentation present(const AlgebraPtr& algebra, std::size_t budget) {
  const LieAlgebra& L = *algebra;
  const std::size_t c = nilpotency_class(L);
  const Subspace derived = bracket_span(L, Subspace::full(L.dim()), Subspace::full(L.dim()));
  std::vector<std::size_t> generators = derived.complement_indices();
  const std::size_t r = generators.size();

  AlgebraPtr free = share(free_nilpotent(r, c, budget));
  std::vector<HallWord> words = hall_basis(r, c);
  std::vector<SparseVector> images;
  for (const auto& w : words) {
    if (w.generator) {
      images.push_back({{generators[*w.generator], Rational(1)}});
    } else {
      images.push_back(bracket(L, images[w.left], images[w.right]));
    }
  }
  LieHom projection(free, algebra, RationalMatrix::from_columns(L.dim(), images));
  if (!projection.is_surjective())
    throw Error(ErrorKind::VerificationFailed, "generators do not generate the algebra");
  Subspace ideal = projection.kernel();
  if (!is_ideal(*free, ideal)) throw Error(ErrorKind::VerificationFailed, "kernel is not an ideal");
  return Presentation{free, algebra, std::move(projection), std::move(ideal), r, c, std::move(generators)};
}

}  // namespace ado
