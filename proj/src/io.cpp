#include "lcsk/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lcsk::io {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

void strip_cr(std::string& line) {
  while (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Sequence read_plain(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Sequence s = std::move(buf).str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

Sequence read_fasta(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  Sequence s;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty() && !header_seen) continue;
    if (!header_seen) {
      if (line.empty() || line[0] != '>') {
        throw InputError("not a FASTA file (missing '>' header): " + path);
      }
      header_seen = true;
      continue;
    }
    if (!line.empty() && line[0] == '>') {
      throw InputError("multiple FASTA records in " + path + "; pass a single-record file");
    }
    s += line;
  }
  if (!header_seen) throw InputError("empty FASTA file: " + path);
  return s;
}

Sequence read_sequence_file(const std::string& path, bool fasta) {
  return fasta ? read_fasta(path) : read_plain(path);
}

void fold_case(Sequence& s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

}  // namespace lcsk::io
