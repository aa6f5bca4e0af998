#include "prat/qexp_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "prat/errors.hpp"

namespace prat {

namespace {

constexpr std::string_view kMagic = "#qexp v1";

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++number_;
    return line;
  }

  std::string require() {
    auto line = next();
    if (!line) throw FormatError("unexpected end of file after line " + std::to_string(number_));
    return *line;
  }

  /// Value part of "#<key> <value>".
  std::string header(std::string_view key) {
    std::string line = require();
    std::string prefix = "#" + std::string(key) + " ";
    if (line.rfind(prefix, 0) != 0) {
      throw FormatError("line " + std::to_string(number_) + ": expected '" + prefix + "...'");
    }
    return line.substr(prefix.size());
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

struct Header {
  int weight2;
  std::uint64_t level;
  std::int64_t charD;
  std::size_t prec;
};

void check_magic(LineReader& reader) {
  std::string line = reader.require();
  if (line != kMagic) {
    if (line.rfind("#qexp ", 0) == 0) throw FormatError("unsupported version: " + line);
    throw FormatError("missing '#qexp v1' header");
  }
}

Header read_header(LineReader& reader) {
  Header h{};
  h.weight2 = parse_int<int>(reader.header("weight2"), "weight2");
  h.level = parse_int<std::uint64_t>(reader.header("level"), "level");
  h.charD = parse_int<std::int64_t>(reader.header("charD"), "charD");
  h.prec = parse_int<std::size_t>(reader.header("prec"), "prec");
  if (h.level == 0) throw FormatError("level must be positive");
  return h;
}

void write_header(std::ostream& out, int weight2, std::uint64_t level, std::int64_t charD,
                  std::size_t prec) {
  out << "#weight2 " << weight2 << '\n'
      << "#level " << level << '\n'
      << "#charD " << charD << '\n'
      << "#prec " << prec << '\n';
}

// Splits "<n>\t<rest>" and validates n against the running index.
std::pair<std::size_t, std::string> split_entry(const std::string& line, std::size_t prec,
                                                std::optional<std::size_t>& last,
                                                std::size_t line_no) {
  auto tab = line.find('\t');
  if (tab == std::string::npos) {
    throw FormatError("line " + std::to_string(line_no) + ": expected '<n>\\t<value>'");
  }
  auto n = parse_int<std::size_t>(std::string_view(line).substr(0, tab), "index");
  if (n > prec) throw FormatError("index " + std::to_string(n) + " exceeds precision");
  if (last && n <= *last) throw FormatError("indices must be strictly increasing");
  last = n;
  return {n, line.substr(tab + 1)};
}

template <typename Fn>
void with_file(const std::filesystem::path& path, std::ios::openmode mode, Fn&& fn) {
  std::fstream file(path, mode);
  if (!file) throw FormatError("cannot open " + path.string());
  fn(file);
}

}  // namespace

void write_qexp(std::ostream& out, const QExpansion& f) {
  out << kMagic << '\n';
  write_header(out, f.weight2(), f.level(), f.character().discriminant(), f.precision());
  for (std::size_t n = 0; n <= f.precision(); ++n) {
    if (f[n] != 0) out << n << '\t' << to_string(f[n]) << '\n';
  }
}

QExpansion read_qexp(std::istream& in) {
  LineReader reader(in);
  check_magic(reader);
  Header h = read_header(reader);
  std::vector<BigRational> coeffs(h.prec + 1, BigRational(0));
  std::optional<std::size_t> last;
  while (auto line = reader.next()) {
    if (line->empty()) throw FormatError("blank line " + std::to_string(reader.number()));
    auto [n, value] = split_entry(*line, h.prec, last, reader.number());
    auto frac = parse_fraction(value);
    if (!frac || value.find('/') == std::string::npos) {
      throw FormatError("bad fraction '" + value + "'");
    }
    if (frac->second <= 0) throw FormatError("denominator must be positive");
    BigRational q(frac->first, frac->second);
    q.canonicalize();
    if (q.get_num() != frac->first || q.get_den() != frac->second) {
      throw FormatError("fraction '" + value + "' is not in lowest terms");
    }
    if (q == 0) throw FormatError("explicit zero coefficient at " + std::to_string(n));
    coeffs[n] = q;
  }
  try {
    return QExpansion(std::move(coeffs), h.weight2, h.level, QuadCharacter(h.charD));
  } catch (const PreconditionError&) {
    throw FormatError("charD " + std::to_string(h.charD) + " is not 1 or fundamental");
  }
}

void write_residue_qexp(std::ostream& out, const ResidueSeries& f) {
  out << kMagic << '\n' << "#residue " << f.p << ' ' << f.e << '\n';
  write_header(out, f.weight2, f.level, f.character_D, f.precision());
  for (std::size_t n = 0; n <= f.precision(); ++n) {
    if (f.coeffs[n] != 0) out << n << '\t' << f.coeffs[n] << '\n';
  }
}

ResidueSeries read_residue_qexp(std::istream& in) {
  LineReader reader(in);
  check_magic(reader);
  std::string residue = reader.header("residue");
  auto space = residue.find(' ');
  if (space == std::string::npos) throw FormatError("expected '#residue <p> <e>'");
  ResidueSeries f;
  f.p = parse_int<std::uint64_t>(std::string_view(residue).substr(0, space), "p");
  f.e = parse_int<unsigned>(std::string_view(residue).substr(space + 1), "e");
  if (!is_prime(f.p) || f.e == 0) throw FormatError("residue header needs prime p and e >= 1");
  Header h = read_header(reader);
  f.weight2 = h.weight2;
  f.level = h.level;
  f.character_D = h.charD;
  f.coeffs.assign(h.prec + 1, 0);
  const std::uint64_t M = f.modulus();
  std::optional<std::size_t> last;
  while (auto line = reader.next()) {
    if (line->empty()) throw FormatError("blank line " + std::to_string(reader.number()));
    auto [n, value] = split_entry(*line, h.prec, last, reader.number());
    auto v = parse_int<std::uint64_t>(value, "residue");
    if (v == 0 || v >= M) throw FormatError("residue out of range at " + std::to_string(n));
    f.coeffs[n] = v;
  }
  return f;
}

void save_qexp(const std::filesystem::path& path, const QExpansion& f) {
  with_file(path, std::ios::out | std::ios::trunc, [&](std::fstream& s) { write_qexp(s, f); });
}

QExpansion load_qexp(const std::filesystem::path& path) {
  std::optional<QExpansion> f;
  with_file(path, std::ios::in, [&](std::fstream& s) { f = read_qexp(s); });
  return *f;
}

void save_residue_qexp(const std::filesystem::path& path, const ResidueSeries& f) {
  with_file(path, std::ios::out | std::ios::trunc,
            [&](std::fstream& s) { write_residue_qexp(s, f); });
}

ResidueSeries load_residue_qexp(const std::filesystem::path& path) {
  std::optional<ResidueSeries> f;
  with_file(path, std::ios::in, [&](std::fstream& s) { f = read_residue_qexp(s); });
  return *f;
}

}  // namespace prat
