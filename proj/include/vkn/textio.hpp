#pragma once

#include <iosfwd>
#include <string>

#include "vkn/braid.hpp"
#include "vkn/matrix.hpp"
#include "vkn/milnor.hpp"
#include "vkn/seifert.hpp"

namespace vkn::io {

std::string slurp(const std::string& path);

/// Text matrix: first line "<rows> <cols>", then rows of integers.
la::IntMat parse_matrix(std::istream& in);
la::IntMat read_matrix_file(const std::string& path);
std::string format_matrix(const la::IntMat& m);

/// Block file: either the text form with header lines A_J / A_K / B, each
/// followed by a text matrix, or a JSON object {"A_J": [[..]], "A_K": ...,
/// "B": ...}.
seifert::BlockSeifert read_block_file(const std::string& path);
seifert::BlockSeifert parse_block(const std::string& content);

/// MMData JSON: {"w1": "...", "w2": "...", "w3": "...", "t123": n,
/// "lk": [lk12, lk13, lk23]}; words use bare digit letters like "2 3^-1".
milnor::MMData parse_mmdata(const std::string& content);

/// MixedBraid JSON: {"m": int, "k": int, "n": int, "word": "1 -2 ...",
/// "parted": true}.
braid::MixedBraid parse_mixed_braid(const std::string& content);
std::string format_mixed_braid(const braid::MixedBraid& mb);

} // namespace vkn::io
