#ifndef SEMITRACE_THREEGEN_HPP_
#define SEMITRACE_THREEGEN_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "semigroup.hpp"

namespace semitrace {

  using Triple = std::array<Int, 3>;

  //! Exponents of the 2x3 matrix
  //!
  //!   x1^a1  x2^a2  x3^a3
  //!   x2^b2  x3^b3  x1^b1
  //!
  //! whose maximal minors cut out a non-symmetric 3-generated semigroup ring,
  //! i.e. the minimal relations
  //!
  //!   c1 n1 = b2 n2 + a3 n3,  c2 n2 = a1 n1 + b3 n3,  c3 n3 = b1 n1 + a2 n2
  //!
  //! with ci = ai + bi. The labeling of n is the one the matrix was computed
  //! for; it need not be increasing.
  struct StructureMatrix {
    Triple n{};
    Triple a{};
    Triple b{};
    Triple c{};

    Triple d() const noexcept {
      return {std::min(a[0], b[0]),
              std::min(a[1], b[1]),
              std::min(a[2], b[2])};
    }

    Int a_product() const {
      return mul(mul(a[0], a[1]), a[2]);
    }

    Int b_product() const {
      return mul(mul(b[0], b[1]), b[2]);
    }

    friend bool operator==(StructureMatrix const&, StructureMatrix const&)
        = default;
  };

  namespace detail {
    // x in <p, q> with p, q > 0.
    inline bool in_two_generated(Int x, Int p, Int q) {
      if (x < 0) {
        return false;
      }
      for (Int alpha = 0; alpha * p <= x; ++alpha) {
        if ((x - alpha * p) % q == 0) {
          return true;
        }
      }
      return false;
    }

    inline void require_minimal_triple(Triple const& n) {
      for (Int x : n) {
        if (x <= 0) {
          fail(ErrorCode::NotMinimal, "generators must be positive");
        }
      }
      if (n[0] == n[1] || n[1] == n[2] || n[0] == n[2]) {
        fail(ErrorCode::NotMinimal, "generators must be pairwise distinct");
      }
      if (std::gcd(std::gcd(n[0], n[1]), n[2]) != 1) {
        fail(ErrorCode::NotMinimal, "generators have a common factor");
      }
      for (std::size_t i = 0; i < 3; ++i) {
        Int const p = n[(i + 1) % 3];
        Int const q = n[(i + 2) % 3];
        if (in_two_generated(n[i], p, q)) {
          fail(ErrorCode::NotMinimal,
               std::to_string(n[i]) + " lies in <" + std::to_string(p) + ","
                   + std::to_string(q) + ">");
        }
      }
    }

    struct MinimalRelation {
      Int  c       = 0;
      Int  alpha   = 0;  // coefficient of the first other generator
      Int  beta    = 0;  // coefficient of the second other generator
      bool regular = true;  // unique representation, both coefficients > 0
    };

    // Least c > 0 with c * ni in <nj, nk>. A representation always exists at
    // c = min(nj, nk), which bounds the search.
    inline MinimalRelation minimal_relation(Int ni, Int nj, Int nk) {
      Int const bound = std::min(nj, nk);
      for (Int c = 1; c <= bound; ++c) {
        Int const        target = mul(c, ni);
        int              count  = 0;
        MinimalRelation  rel;
        for (Int alpha = 0; alpha * nj <= target; ++alpha) {
          Int const rest = target - alpha * nj;
          if (rest % nk == 0) {
            if (count == 0) {
              rel = {c, alpha, rest / nk, true};
            }
            ++count;
          }
        }
        if (count > 0) {
          rel.regular = count == 1 && rel.alpha > 0 && rel.beta > 0;
          return rel;
        }
      }
      fail(ErrorCode::InternalInconsistency,
           "no relation found for " + std::to_string(ni));
    }

    inline bool recovers_generators(StructureMatrix const& s) {
      auto const& a = s.a;
      auto const& b = s.b;
      return s.n[0] == a[1] * a[2] + b[1] * a[2] + b[1] * b[2]
             && s.n[1] == a[0] * a[2] + a[0] * b[2] + b[0] * b[2]
             && s.n[2] == a[0] * a[1] + b[0] * a[1] + b[0] * b[1];
    }

    inline bool consistent(StructureMatrix const& s) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (s.a[i] <= 0 || s.b[i] <= 0 || s.c[i] != s.a[i] + s.b[i]) {
          return false;
        }
      }
      return recovers_generators(s);
    }

    // Slots the three minimal relations for the labeling n. Returns nullopt
    // when some relation is not regular (complete intersection).
    inline std::optional<StructureMatrix> slot_relations(Triple const& n) {
      StructureMatrix s;
      s.n = n;
      // c1 n1 = b2 n2 + a3 n3
      auto r1 = minimal_relation(n[0], n[1], n[2]);
      // c2 n2 = a1 n1 + b3 n3
      auto r2 = minimal_relation(n[1], n[0], n[2]);
      // c3 n3 = b1 n1 + a2 n2
      auto r3 = minimal_relation(n[2], n[0], n[1]);
      if (!r1.regular || !r2.regular || !r3.regular) {
        return std::nullopt;
      }
      s.c = {r1.c, r2.c, r3.c};
      s.b[1] = r1.alpha;
      s.a[2] = r1.beta;
      s.a[0] = r2.alpha;
      s.b[2] = r2.beta;
      s.b[0] = r3.alpha;
      s.a[1] = r3.beta;
      return s;
    }
  }  // namespace detail

  //! Herzog's criterion: up to permutation d = gcd(n1, n2) > 1 and
  //! n3 in <n1/d, n2/d>.
  inline bool symmetric3(Int n1, Int n2, Int n3) {
    Triple const n{n1, n2, n3};
    detail::require_minimal_triple(n);
    for (std::size_t k = 0; k < 3; ++k) {
      Int const p = n[(k + 1) % 3];
      Int const q = n[(k + 2) % 3];
      Int const d = std::gcd(p, q);
      if (d > 1 && detail::in_two_generated(n[k], p / d, q / d)) {
        return true;
      }
    }
    return false;
  }

  //! Structure matrix for the labeling `n`. If the relations do not fit the
  //! cyclic slot pattern, the two cyclic relabelings are tried before
  //! giving up with LabelMismatch. SymmetricInput when H is a complete
  //! intersection.
  inline StructureMatrix structure_matrix(Triple const& n) {
    detail::require_minimal_triple(n);
    bool const herzog = symmetric3(n[0], n[1], n[2]);
    Triple     label  = n;
    for (int attempt = 0; attempt < 3; ++attempt) {
      auto s = detail::slot_relations(label);
      if (!s) {
        detail::ensure(herzog,
                       "irregular minimal relation on a semigroup that fails "
                       "Herzog's symmetry criterion");
        detail::fail(ErrorCode::SymmetricInput,
                     "<" + detail::join(n) + "> is symmetric");
      }
      detail::ensure(!herzog,
                     "regular relations on a semigroup satisfying Herzog's "
                     "symmetry criterion");
      if (detail::consistent(*s)) {
        return *s;
      }
      label = {label[1], label[2], label[0]};
    }
    detail::fail(ErrorCode::LabelMismatch,
                 "no cyclic labeling of <" + detail::join(n)
                     + "> fits the structure matrix pattern");
  }

  //! Increasing labeling.
  inline StructureMatrix structure_matrix(NumericalSemigroup const& h) {
    if (h.embedding_dimension() != 3) {
      detail::fail(ErrorCode::BadParams, "embedding dimension must be 3");
    }
    auto g = h.generators();
    return structure_matrix(Triple{g[0], g[1], g[2]});
  }

  struct Residue3 {
    Int                            residue = 0;
    Triple                         d{};
    std::optional<StructureMatrix> matrix;
  };

  //! res(H) = d1 d2 d3 with di = min(ai, bi); 0 for symmetric H.
  inline Residue3 residue3(NumericalSemigroup const& h) {
    if (h.embedding_dimension() != 3) {
      detail::fail(ErrorCode::BadParams, "embedding dimension must be 3");
    }
    if (h.is_symmetric()) {
      return {};
    }
    auto       s = structure_matrix(h);
    auto const d = s.d();
    return {mul(mul(d[0], d[1]), d[2]), d, s};
  }

  //! max{c1 n1 + b3 n3, c2 n2 + a3 n3} - (n1 + n2 + n3).
  inline Int frobenius3(StructureMatrix const& s) {
    auto const& n     = s.n;
    Int const   left  = add(mul(s.c[0], n[0]), mul(s.b[2], n[2]));
    Int const   right = add(mul(s.c[1], n[1]), mul(s.a[2], n[2]));
    return sub(std::max(left, right), add(add(n[0], n[1]), n[2]));
  }

  //! Closed form, checked against the Apery-set computation.
  inline Int frobenius3(NumericalSemigroup const& h) {
    Int const fr = frobenius3(structure_matrix(h));
    detail::ensure(fr == h.frobenius(),
                   "closed-form Frobenius number disagrees with Apery set");
    return fr;
  }

  struct GenusIdentity {
    Int  lhs       = 0;  // 2 g(H) - (Fr(H) + 1)
    Int  a_product = 0;
    Int  b_product = 0;
    bool ok        = false;
  };

  //! 2 g(H) - (Fr(H) + 1) is one of a1 a2 a3, b1 b2 b3.
  inline GenusIdentity genus_identity_check(NumericalSemigroup const& h) {
    auto const    s = structure_matrix(h);
    GenusIdentity out;
    out.lhs       = 2 * h.genus() - (h.frobenius() + 1);
    out.a_product = s.a_product();
    out.b_product = s.b_product();
    out.ok        = out.lhs == out.a_product || out.lhs == out.b_product;
    return out;
  }

  //! Recognizes <3, 3a+1, 3a+2>, a >= 1 (as a set of generators).
  inline bool is_conductor_family(NumericalSemigroup const& h) {
    auto g = h.generators();
    return g.size() == 3 && g[0] == 3 && g[1] % 3 == 1 && g[2] == g[1] + 1;
  }

  //! Position of tr(H) from the structure matrix alone: tr(H) is the ideal
  //! generated by d1 n1, d2 n2, d3 n3, which is M exactly when every di = 1.
  inline PositionInfo trace_position3(NumericalSemigroup const& h) {
    if (h.embedding_dimension() != 3) {
      detail::fail(ErrorCode::BadParams, "embedding dimension must be 3");
    }
    if (h.is_symmetric()) {
      return {TracePosition::WholeH, false};
    }
    auto const d        = structure_matrix(h).d();
    bool const equals_m = d[0] == 1 && d[1] == 1 && d[2] == 1;
    if (is_conductor_family(h)) {
      return {TracePosition::EqualsConductor, equals_m};
    }
    return {equals_m ? TracePosition::EqualsM
                     : TracePosition::StrictlyBetween,
            false};
  }

}  // namespace semitrace

#endif  // SEMITRACE_THREEGEN_HPP_
