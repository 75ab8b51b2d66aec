/**
 * @file io_formats.hpp
 * @brief JSON schemas for coefficient and sequence files.
 *
 * Rationals travel as strings "p/q" (or "p"). A coefficient file provides
 * ell+1 classes, each with families "A" and "B" given either as an explicit
 * table ["p/q", ...] or as an affine rule {"base": "p/q", "step": "p/q"}
 * meaning A_{i,j} = base + j*step:
 *
 *   {"classes": [{"A": {"base": "1", "step": "1"}, "B": ["0", "1/2"]}, ...]}
 *
 * A sequence file is a plain array of rationals.
 */
#ifndef HYPERINVERT_IO_FORMATS_HPP
#define HYPERINVERT_IO_FORMATS_HPP

#include <string>

#include <hyperinvert/inversion.hpp>

namespace hyperinvert {

FactorSequences parse_coefficients_json(const std::string& text);
FiniteSequence parse_sequence_json(const std::string& text);
std::string sequence_to_json(const FiniteSequence& seq);

FactorSequences load_coefficients_file(const std::string& path);
FiniteSequence load_sequence_file(const std::string& path);

} // namespace hyperinvert

#endif
