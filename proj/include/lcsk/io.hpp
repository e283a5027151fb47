#ifndef LCSK_IO_HPP
#define LCSK_IO_HPP

#include <string>

#include "lcsk/types.hpp"

namespace lcsk::io {

/// Whole file as raw bytes, trailing newline characters stripped.
Sequence read_plain(const std::string& path);

/// The sequence of the first FASTA record. A second record is rejected:
/// inputs carrying several sequences must be split by the caller.
Sequence read_fasta(const std::string& path);

Sequence read_sequence_file(const std::string& path, bool fasta);

/// ASCII uppercasing, so soft-masked (lowercase) stretches compare equal to
/// unmasked ones.
void fold_case(Sequence& s);

}  // namespace lcsk::io

#endif  // LCSK_IO_HPP
