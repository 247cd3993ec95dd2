#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmm/scheme.hpp"

namespace fmm {

struct CatalogEntry {
  BilinearScheme scheme;
  std::string alias;  // short CLI name, e.g. "makarov99"
  std::string citation;
  std::size_t expected_rank;
};

/// 5x5x5 with 99 products and free parameter L.
BilinearScheme makarov_sedoglavic_5x5x5_99();

/// Source text of the m38 left factor, and the form the Brent check accepts.
inline constexpr std::string_view kM38PublishedAlpha = "a21 + a41 a43";
inline constexpr std::string_view kM38VerifiedAlpha = "a21 + a41 + a43";

/// The 99-product scheme with the left factor of m38 replaced by `alpha`,
/// a linear form such as "a21 - a41 + a43".  Used to test candidate
/// readings of the m38 typo; throws ParseError on malformed forms.
BilinearScheme makarov_sedoglavic_5x5x5_99_with_m38(std::string_view alpha);

BilinearScheme strassen_2x2x2();
BilinearScheme winograd_2x2x2();
BilinearScheme laderman_3x3x3();
BilinearScheme hopcroft_kerr_2x2x3();
BilinearScheme hopcroft_kerr_3x3x2();
/// 1x1x1 : 1, the unit of composition.
BilinearScheme trivial_1x1x1();

/// Cyclic symmetry of the matrix-multiplication tensor: a scheme for
/// (a, b, c) becomes one for (b, c, a) via (alpha, beta, gamma) ->
/// (beta, gamma^T, alpha^T).  Three rotations give back the input.
BilinearScheme rotate_scheme(const BilinearScheme& scheme);

/// All shipped entries, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Looks up by alias ("strassen") or full scheme name ("strassen_2x2x2_7").
std::optional<BilinearScheme> find_catalog_scheme(std::string_view name);

/// Builds a scheme from product formulas, one per line:
///
///   m1 = (a11 + L*a22) * (b11 - L^-1*b22)
///   c11 = m1 - L*m2
///
/// Products are numbered m1..mr and outputs c<i><j> (1-based, single digit).
/// Every output entry not listed is zero.
BilinearScheme scheme_from_formulas(std::size_t a, std::size_t b, std::size_t c, std::string name,
                                    std::string provenance, std::string_view formulas);

}  // namespace fmm
