#include "subsetsum/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "subsetsum/errors.hpp"

namespace subsetsum {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, int line_no, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": " + what +
                     " is not an integer: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  if (lines.empty() || tokenize(lines[0]).empty())
    throw InputError("line 1: missing header 'n u t'");
  const auto header = tokenize(lines[0]);
  if (header.size() != 3)
    throw InputError("line 1: header needs exactly 3 fields 'n u t', found " +
                     std::to_string(header.size()));

  const std::int64_t n = parse_int(header[0], 1, "element count n");
  if (n < 0) throw InputError("line 1: element count n must be >= 0");
  const std::int64_t u = parse_int(header[1], 1, "bound u");
  if (u < 0) throw InputError("line 1: bound u must be >= 0");
  std::optional<std::uint64_t> t;
  if (header[2] != "-") {
    const std::int64_t tv = parse_int(header[2], 1, "target t");
    if (tv < 0) throw InputError("line 1: target t must be >= 0 (or '-')");
    t = static_cast<std::uint64_t>(tv);
  }

  std::vector<std::int64_t> elems;
  for (std::size_t li = 1; li < lines.size(); ++li)
    for (std::string_view tok : tokenize(lines[li]))
      elems.push_back(parse_int(tok, static_cast<int>(li) + 1, "element"));

  if (elems.size() != static_cast<std::size_t>(n))
    throw InputError("line 2: declared " + std::to_string(n) +
                     " elements, found " + std::to_string(elems.size()));

  return make_instance(elems, static_cast<std::uint64_t>(u), t);
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << inst.n() << ' ' << inst.bound << ' ';
  if (inst.target)
    os << *inst.target;
  else
    os << '-';
  os << '\n';
  for (std::size_t i = 0; i < inst.elements.size(); ++i)
    os << inst.elements[i] << (i + 1 == inst.elements.size() ? "" : " ");
  os << '\n';
  return os.str();
}

}  // namespace subsetsum
