#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germ/calculus.hpp"

namespace germ {

enum class Tag { NonSingular, WhitneyUmbrella, Swallowtail, CuspidalEdge, Unrecognized };

std::string to_string(Tag t);

struct Diagnostic {
  std::string name;
  Rational value;
};

/// Every quantity a classifier evaluated, in evaluation order, is listed in
/// `diagnostics` whatever the outcome.
struct Classification {
  Tag tag = Tag::Unrecognized;
  std::vector<Diagnostic> diagnostics;

  const Rational* find(const std::string& name) const;
};

/// Pedal side, from p alone:
///   p_x(0) != 0                      -> NonSingular
///   p_xx(0) != 0 and p_y(0) != 0     -> WhitneyUmbrella
///   otherwise                        -> Unrecognized
Classification classify_pedal(const PedalGerm& g);

/// Cross-cap test: m_x(0) = 0 and det(m_y, m_xx, m_xy)(0) != 0.
/// Throws KernelNotX when m_x(0) != 0.
bool whitney_criterion(const MapGerm3& m);

/// Legendrian side, from L = lj_reduced:
///   L(0) = 0, L_x(0) != 0                                  -> CuspidalEdge
///   L(0) = L_x(0) = 0, L_xx(0) != 0, det d(L, L_x)(0) != 0 -> Swallowtail
///   otherwise                                              -> Unrecognized
Classification classify_legendrian(const NormalizedLegendrianGerm& germ);

/// The same decision applied to any representative of the Legendrian
/// Jacobian (e.g. lj_reduced times a positive unit).
Classification classify_legendrian_jacobian(const Jet& lj);

/// Counterpart tag under integration.
Tag integrated_tag(Tag pedal);

struct CorrespondenceReport {
  Classification pedal;
  Classification legendrian;
  bool consistent = false;
};

CorrespondenceReport correspondence_check(const PedalGerm& g);

}  // namespace germ
