#pragma once

#include <map>
#include <optional>
#include <string>

#include "revaff/jordan.hpp"

namespace revaff {

enum class Flag { Yes, No, Unknown };

inline const char* flag_name(Flag f) {
  switch (f) {
    case Flag::Yes: return "yes";
    case Flag::No: return "no";
    default: return "unknown";
  }
}

// Group mode classifies r g r^-1 = g^-1 (reversibility); Lie mode classifies
// g X g^-1 = -X (Ad-reality). The two use separate pairing-rule tables.
enum class ReportMode { Group, Lie };

struct PairingEntry {
  bool is_pair = false;
  int first = -1;
  int second = -1; // pair partner, or -1 for singletons
  std::string rule;
};

struct PairingCertificate {
  std::vector<PairingEntry> entries;
  bool complete = false;
  std::string failure; // set when no legal pairing exists
};

template <typename T>
struct ReverserWitness {
  Matrix<T> element;
  bool is_involution = false;
  bool verified = false;
};

template <typename T>
struct ReversibilityReport {
  ReportMode mode = ReportMode::Group;
  Flag primary = Flag::No; // reversible (group) / Ad-real (Lie)
  Flag strong = Flag::No;  // strongly reversible / strongly Ad-real
  PairingCertificate pairing;
  std::optional<ReverserWitness<T>> witness;
};

namespace detail {

inline std::string block_str(const JordanBlockSpec& b) {
  if (b.kind == JordanBlockSpec::Kind::Standard)
    return "J(" + gaussian_str(b.lambda) + "," + std::to_string(b.size) + ")";
  return "JR(" + b.mu.str() + "+-" + b.nu.str() + "i," + std::to_string(2 * b.size) + ")";
}

// Partner block under the ring's pairing rule, or nullopt for singletons.
template <typename T>
std::optional<JordanBlockSpec> pairing_partner(const JordanBlockSpec& b, ReportMode mode, std::string& rule) {
  constexpr Ring ring = ring_of_v<T>;
  if (mode == ReportMode::Group) {
    if (b.kind == JordanBlockSpec::Kind::RealPair) {
      Rational n2 = b.mu * b.mu + b.nu * b.nu;
      if (n2 == Rational(1)) {
        rule = "unit-circle pair singleton";
        return std::nullopt;
      }
      rule = "pair<->inverse-pair";
      return JordanBlockSpec::real_pair(b.mu / n2, b.nu / n2, b.size);
    }
    if constexpr (ring == Ring::H) {
      if (b.lambda.norm() == Rational(1)) {
        rule = b.lambda.is_real() ? "gamma=+-1 singleton" : "unit-modulus singleton";
        return std::nullopt;
      }
      rule = "lambda<->lambda^-1";
      return JordanBlockSpec::standard(canonical_class(b.lambda.inverse()), b.size);
    } else {
      if (b.lambda == GaussianRational(1) || b.lambda == GaussianRational(-1)) {
        rule = "gamma=+-1 singleton";
        return std::nullopt;
      }
      rule = "lambda<->lambda^-1";
      return JordanBlockSpec::standard(b.lambda.inverse(), b.size);
    }
  }
  // Lie mode
  if (b.kind == JordanBlockSpec::Kind::RealPair) {
    if (b.mu.is_zero()) {
      rule = "imaginary-pair singleton";
      return std::nullopt;
    }
    rule = "pair<->negated-pair";
    return JordanBlockSpec::real_pair(-b.mu, b.nu, b.size);
  }
  if constexpr (ring == Ring::H) {
    if (b.lambda.re.is_zero()) {
      rule = "imaginary-class singleton";
      return std::nullopt;
    }
    rule = "lambda<->-lambda";
    return JordanBlockSpec::standard(canonical_class(-b.lambda), b.size);
  } else {
    if (b.lambda.is_zero()) {
      rule = "zero singleton";
      return std::nullopt;
    }
    rule = "lambda<->-lambda";
    return JordanBlockSpec::standard(-b.lambda, b.size);
  }
}

// Greedy multiset matching in canonical block order. All partner maps are
// involutive, so greedy first-match is exact.
template <typename T>
PairingCertificate pair_blocks(const std::vector<JordanBlockSpec>& blocks, ReportMode mode) {
  PairingCertificate cert;
  std::vector<bool> used(blocks.size(), false);
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::string rule;
    auto partner = pairing_partner<T>(blocks[i], mode, rule);
    if (!partner) {
      cert.entries.push_back({false, i, -1, rule});
      continue;
    }
    int j = -1;
    for (int k = i + 1; k < static_cast<int>(blocks.size()); ++k)
      if (!used[k] && blocks[k] == *partner) {
        j = k;
        break;
      }
    if (j < 0) {
      cert.complete = false;
      cert.failure = "block " + block_str(blocks[i]) + " has no partner " + block_str(*partner);
      cert.entries.clear();
      return cert;
    }
    used[j] = true;
    cert.entries.push_back({true, i, j, rule});
  }
  cert.complete = true;
  return cert;
}

// diag(j, -j, j, ..., (-1)^(n-1) j).
inline Matrix<Quaternion> alternating_j_diag(int n) {
  Matrix<Quaternion> d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = (i % 2 == 0) ? quat_j() : -quat_j();
  return d;
}

inline Matrix<Quaternion> j_scalar_diag(int n) {
  Matrix<Quaternion> d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = quat_j();
  return d;
}

// diag(I11, -I11, ...) with I11 = diag(1, -1); 2n x 2n.
inline Matrix<Rational> alternating_i11_diag(int n) {
  Matrix<Rational> d(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    Rational s = (i % 2 == 0) ? Rational(1) : Rational(-1);
    d(2 * i, 2 * i) = s;
    d(2 * i + 1, 2 * i + 1) = -s;
  }
  return d;
}

// diag(I2, -I2, ...); 2n x 2n.
inline Matrix<Rational> alternating_i2_diag(int n) {
  Matrix<Rational> d(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    Rational s = (i % 2 == 0) ? Rational(1) : Rational(-1);
    d(2 * i, 2 * i) = s;
    d(2 * i + 1, 2 * i + 1) = s;
  }
  return d;
}

inline Matrix<Rational> omega_real_for(const GaussianRational& lambda, int n) {
  return psi_embed(-omega(lambda, n));
}

// Reversing element for the assembled Jordan form, placed blockwise at the
// pairing certificate's positions. Group mode follows the five reverser
// families for Jordan forms; Lie mode the Ad-reality constructions. For
// quaternionic unit-modulus (group) or purely imaginary (Lie) classes,
// identical singleton blocks are taken two at a time so the result is an
// involution whenever the even-multiplicity criterion holds.
template <typename T>
Matrix<T> reverser_on_jordan(const std::vector<JordanBlockSpec>& blocks, const PairingCertificate& cert,
                             ReportMode mode) {
  constexpr Ring ring = ring_of_v<T>;
  int n = 0;
  std::vector<int> offset(blocks.size(), 0);
  for (size_t i = 0; i < blocks.size(); ++i) {
    offset[i] = n;
    n += blocks[i].dim();
  }
  Matrix<T> r(n, n);

  // group quaternionic non-real singletons pairwise per (lambda, size)
  std::vector<int> partner_of(blocks.size(), -1);
  std::vector<bool> grouped(blocks.size(), false);
  if constexpr (ring == Ring::H) {
    std::map<std::pair<std::pair<std::string, std::string>, int>, std::vector<int>> groups;
    for (const auto& e : cert.entries) {
      if (e.is_pair) continue;
      const auto& b = blocks[e.first];
      if (b.lambda.is_real()) continue;
      groups[{{b.lambda.re.str(), b.lambda.im.str()}, b.size}].push_back(e.first);
    }
    for (auto& [key, idx] : groups)
      for (size_t k = 0; k + 1 < idx.size(); k += 2) {
        partner_of[idx[k]] = idx[k + 1];
        partner_of[idx[k + 1]] = idx[k];
      }
  }

  auto place_pair = [&](int i, int j, const Matrix<T>& x, const Matrix<T>& y) {
    place(r, offset[i], offset[j], x);
    place(r, offset[j], offset[i], y);
  };

  for (const auto& e : cert.entries) {
    const JordanBlockSpec& b = blocks[e.first];
    if (!e.is_pair) {
      int i = e.first;
      if (grouped[i]) continue;
      if (mode == ReportMode::Group) {
        if (b.kind == JordanBlockSpec::Kind::RealPair) {
          if constexpr (ring == Ring::R) {
            // unit-circle pair block: Omega_R(K, 2n) * sigma
            Matrix<Rational> w = omega_real(b.mu, b.nu, b.size) * alternating_diag<Rational>(2 * b.size);
            place(r, offset[i], offset[i], w);
          }
        } else if (b.lambda.is_real()) {
          place(r, offset[i], offset[i], omega(from_gaussian<T>(b.lambda), b.size));
        } else if constexpr (ring == Ring::H) {
          int j = partner_of[i];
          Matrix<Quaternion> x = promote_h(omega(b.lambda, b.size)) * j_scalar_diag(b.size);
          if (j < 0) {
            // leftover odd unit-modulus class: a reverser, not an involution
            place(r, offset[i], offset[i], x);
          } else {
            grouped[i] = grouped[j] = true;
            place_pair(i, j, x, inverse(x));
          }
        }
      } else {
        if (b.kind == JordanBlockSpec::Kind::RealPair) {
          if constexpr (ring == Ring::R) place(r, offset[i], offset[i], alternating_i11_diag(b.size));
        } else if (b.lambda.is_zero()) {
          place(r, offset[i], offset[i], alternating_diag<T>(b.size));
        } else if constexpr (ring == Ring::H) {
          // purely imaginary nonzero class
          int j = partner_of[i];
          Matrix<Quaternion> tau = alternating_j_diag(b.size);
          if (j < 0) {
            place(r, offset[i], offset[i], tau);
          } else {
            grouped[i] = grouped[j] = true;
            place_pair(i, j, tau, -tau);
          }
        }
      }
      continue;
    }

    int i = e.first, j = e.second;
    if (mode == ReportMode::Group) {
      if (b.kind == JordanBlockSpec::Kind::RealPair) {
        if constexpr (ring == Ring::R) {
          GaussianRational lambda(b.mu, b.nu);
          Matrix<Rational> sigma = alternating_diag<Rational>(2 * b.size);
          place_pair(i, j, omega_real_for(lambda, b.size) * sigma, sigma * omega_real_for(lambda.inverse(), b.size));
        }
      } else if constexpr (ring == Ring::H) {
        if (b.lambda.is_real()) {
          place_pair(i, j, omega(from_gaussian<T>(b.lambda), b.size), omega(from_gaussian<T>(b.lambda.inverse()), b.size));
        } else {
          Matrix<Quaternion> jd = j_scalar_diag(b.size);
          place_pair(i, j, promote_h(omega(b.lambda, b.size)) * jd,
                     inverse(jd) * promote_h(omega(b.lambda.inverse(), b.size)));
        }
      } else {
        place_pair(i, j, omega(from_gaussian<T>(b.lambda), b.size), omega(from_gaussian<T>(b.lambda.inverse()), b.size));
      }
    } else {
      if (b.kind == JordanBlockSpec::Kind::RealPair) {
        if constexpr (ring == Ring::R) {
          Matrix<Rational> tau = alternating_i2_diag(b.size);
          Matrix<Rational> sigma = alternating_diag<Rational>(2 * b.size);
          place_pair(i, j, tau * sigma, sigma * tau);
        }
      } else if constexpr (ring == Ring::H) {
        Matrix<Quaternion> tau = alternating_diag<Quaternion>(b.size);
        if (b.lambda.is_real()) {
          place_pair(i, j, tau, tau);
        } else {
          Matrix<Quaternion> jd = j_scalar_diag(b.size);
          place_pair(i, j, tau * jd, inverse(jd) * tau);
        }
      } else {
        Matrix<T> tau = alternating_diag<T>(b.size);
        place_pair(i, j, tau, tau);
      }
    }
  }
  return r;
}

template <typename T>
ReverserWitness<T> transported_witness(const Matrix<T>& a, const JordanForm<T>& form, const Matrix<T>& r_jordan,
                                       ReportMode mode) {
  ReverserWitness<T> w;
  w.element = form.S_inv * r_jordan * form.S;
  Matrix<T> lhs = w.element * a * inverse(w.element);
  Matrix<T> rhs = mode == ReportMode::Group ? inverse(a) : -a;
  w.verified = (lhs == rhs);
  w.is_involution = (w.element * w.element == Matrix<T>::identity(a.rows()));
  require_internal(w.verified, "synthesized reverser failed exact verification");
  return w;
}

// Even-multiplicity criterion for strong flags over H: every relevant
// singleton class (unit-modulus non-real in group mode, nonzero purely
// imaginary in Lie mode) must occur an even number of times.
inline bool h_even_multiplicity(const std::vector<JordanBlockSpec>& blocks, const PairingCertificate& cert,
                                ReportMode mode) {
  std::map<std::pair<std::pair<std::string, std::string>, int>, int> counts;
  for (const auto& e : cert.entries) {
    if (e.is_pair) continue;
    const auto& b = blocks[e.first];
    if (b.lambda.is_real()) continue;
    if (mode == ReportMode::Lie && !b.lambda.re.is_zero()) continue;
    counts[{{b.lambda.re.str(), b.lambda.im.str()}, b.size}] += 1;
  }
  for (const auto& [key, c] : counts)
    if (c % 2 != 0) return false;
  return true;
}

template <typename T>
ReversibilityReport<T> classify(const Matrix<T>& a, const JordanForm<T>& form, ReportMode mode) {
  constexpr Ring ring = ring_of_v<T>;
  if (!a.is_square()) throw_input("ShapeMismatch", "classification of non-square matrix");
  require_internal(form.S * a == form.J * form.S, "Jordan form does not certify this matrix");
  if (mode == ReportMode::Group && !is_invertible(a))
    throw_domain("SingularInput", "group-mode classification needs an invertible matrix");

  ReversibilityReport<T> rep;
  rep.mode = mode;
  rep.pairing = pair_blocks<T>(form.blocks, mode);
  if (!rep.pairing.complete) {
    rep.primary = Flag::No;
    rep.strong = Flag::No;
    return rep;
  }
  rep.primary = Flag::Yes;
  if constexpr (ring != Ring::H) {
    rep.strong = Flag::Yes; // over R and C the two notions coincide
  } else {
    if (h_even_multiplicity(form.blocks, rep.pairing, mode)) {
      rep.strong = Flag::Yes;
    } else if (a.rows() == 1) {
      // the 1x1 obstruction: an involution w j would need |w|^2 = -1
      rep.strong = Flag::No;
    } else {
      rep.strong = Flag::Unknown;
    }
  }
  rep.witness = transported_witness(a, form, reverser_on_jordan<T>(form.blocks, rep.pairing, mode), mode);
  if (rep.strong == Flag::Yes)
    require_internal(rep.witness->is_involution, "strong classification without an involutive witness");
  return rep;
}

} // namespace detail

// --- spec surface ---

template <typename T>
ReversibilityReport<T> classify_reversible(const Matrix<T>& a, const JordanForm<T>& form) {
  return detail::classify(a, form, ReportMode::Group);
}

template <typename T>
ReversibilityReport<T> classify_strongly_reversible(const Matrix<T>& a, const JordanForm<T>& form) {
  return detail::classify(a, form, ReportMode::Group);
}

template <typename T>
ReversibilityReport<T> classify_ad_real(const Matrix<T>& x, const JordanForm<T>& form) {
  return detail::classify(x, form, ReportMode::Lie);
}

template <typename T>
ReversibilityReport<T> classify_strongly_ad_real(const Matrix<T>& x, const JordanForm<T>& form) {
  return detail::classify(x, form, ReportMode::Lie);
}

// One explicit reverser g with g A g^-1 = A^-1, assembled blockwise on the
// Jordan form and conjugated back through the similarity certificate.
template <typename T>
ReverserWitness<T> reverser(const Matrix<T>& a, const JordanForm<T>& form) {
  auto rep = classify_reversible(a, form);
  if (rep.primary != Flag::Yes) throw_domain("NotReversible", rep.pairing.failure);
  return *rep.witness;
}

// g with g X g^-1 = -X.
template <typename T>
ReverserWitness<T> ad_reverser(const Matrix<T>& x, const JordanForm<T>& form) {
  auto rep = classify_ad_real(x, form);
  if (rep.primary != Flag::Yes) throw_domain("NotAdReal", rep.pairing.failure);
  return *rep.witness;
}

// A = g1 * g2 with g1, g2 involutions: g1 = r, g2 = r A for an involutive
// reverser r. Both factors are re-checked, never assumed.
template <typename T>
std::pair<ReverserWitness<T>, ReverserWitness<T>> two_involutions(const Matrix<T>& a, const JordanForm<T>& form) {
  auto rep = classify_strongly_reversible(a, form);
  if (rep.strong != Flag::Yes)
    throw_domain("NotStronglyReversible",
                 rep.strong == Flag::Unknown ? "strong reversibility is unknown for this quaternionic pattern"
                                             : "matrix is not strongly reversible");
  Matrix<T> r = rep.witness->element;
  Matrix<T> g2 = r * a;
  Matrix<T> id = Matrix<T>::identity(a.rows());
  if (!(r * r == id) || !(g2 * g2 == id) || !(r * g2 == a))
    throw_domain("WitnessConstructionFailed", "two-involution factorization failed exact verification");
  ReverserWitness<T> w1{r, true, true};
  ReverserWitness<T> w2{g2, true, true};
  return {w1, w2};
}

// The reversing symmetry group E(g) = Z(g) union R(g), described by one
// representative reverser; the centralizer has index 1 or 2 in E(g).
template <typename T>
struct ReversingSymmetry {
  bool reversible = false;
  std::optional<ReverserWitness<T>> representative;
  int index = 1; // index of the centralizer in E(g)
  std::string statement;
};

template <typename T>
ReversingSymmetry<T> reversing_symmetry(const Matrix<T>& a, const JordanForm<T>& form) {
  ReversingSymmetry<T> rs;
  auto rep = classify_reversible(a, form);
  rs.reversible = rep.primary == Flag::Yes;
  if (!rs.reversible) {
    rs.index = 1;
    rs.statement = "E(g) = Z(g)";
    return rs;
  }
  rs.representative = *rep.witness;
  rs.index = (a == inverse(a)) ? 1 : 2;
  rs.statement = rs.index == 1 ? "E(g) = Z(g) (g = g^-1, the reverser centralizes)" : "E(g) = Z(g) union r*Z(g)";
  return rs;
}

} // namespace revaff
