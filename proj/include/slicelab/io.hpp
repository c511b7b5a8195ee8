#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "slicelab/counting.hpp"
#include "slicelab/encoding.hpp"
#include "slicelab/search.hpp"
#include "slicelab/slicerank.hpp"

namespace slicelab {

using Json = nlohmann::json;

/// Equation file: '#' comments, "key=value" lines for q (as "p^e" or an
/// integer), optional modulus, r, k, optional d, then k coefficient lines in
/// the ascending-coefficient format.
///
///     q=3
///     r=2
///     k=3
///     d=0
///     1
///     1
///     1
struct EquationFile {
  Field field;
  EquationSpec eq;
};

/// Throws Error{ParseError} or Error{InvalidEquation}.
EquationFile parse_equation_file(std::string_view text);
std::string format_equation_file(const Field& field, const EquationSpec& eq);

/// Inline coefficient list "1;1;1" or "1 2;2 1;0": polynomials separated by ';'.
std::vector<UniPoly> parse_coefficient_list(std::string_view text, const Field& field);

/// Set file: header "q=<spec> n=<n>" then one polynomial per line.
PolySet parse_polyset_file(std::string_view text, const Field& field);
std::string format_polyset_file(const PolySet& set, const Field& field);

/// "(1,1,2)" and "{0,1}", polynomials in the ascending-coefficient format.
std::string format_tuple(std::span<const UniPoly> tuple);
std::string format_set(const PolySet& set);

Json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j, const Field& field);

Json bound_report_to_json(const BoundReport& report);
std::string bound_report_to_text(const BoundReport& report);
std::string bound_csv_header();
std::string bound_report_to_csv_row(const BoundReport& report);

Json solution_report_to_json(const SolutionReport& report);
std::string solution_report_to_text(const SolutionReport& report);

/// Everything needed to re-check a slice-rank upper bound independently:
/// the instance, the reduced indicator polynomial and the cover.
struct CoverCertificate {
  Field field = Field::of_order(2);
  std::optional<EquationSpec> eq;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::uint64_t degree = 0;
  MultiPoly indicator;
  SliceCover cover;
  /// k * |M_{floor(threshold), n}|.
  BigInt size_bound;
  CoverVerdict verdict;
};

/// Builds the equation map, its indicator polynomial and the pigeonhole
/// cover at threshold (q-1) m l / k, then verifies the cover: exhaustively
/// when q^{kn} fits budget.max_points, otherwise by sampling.
CoverCertificate certify_equation(const Field& field, const EquationSpec& eq, std::size_t n,
                                  VerifyOptions options = {}, const Budget& budget = {});

/// Re-verifies a parsed certificate from scratch: the cover against the
/// stated indicator, every slot monomial against the threshold, and, when the
/// equation is present, the indicator against a fresh recomputation.
CoverVerdict recheck_certificate(const CoverCertificate& cert, VerifyOptions options = {},
                                 const Budget& budget = {});

Json certificate_to_json(const CoverCertificate& cert);
/// Throws Error{ParseError} on malformed documents.
CoverCertificate certificate_from_json(const Json& j);
std::string certificate_to_text(const CoverCertificate& cert);

}  // namespace slicelab
