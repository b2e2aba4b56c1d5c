// dejean: verification runs, morphism search and word utilities.
//
// Exit codes: 0 success, 1 a check failed or nothing was found, 2 usage,
// I/O or malformed input. Results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dejean/morphisms.hpp"
#include "dejean/pansiot.hpp"
#include "dejean/report.hpp"
#include "dejean/search.hpp"
#include "dejean/verifier.hpp"
#include "dejean/words.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Raised for anything that should end in exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// The word argument, or the first line of stdin when absent.
std::string read_word(const std::optional<std::string>& arg) {
  if (arg) return trim(*arg);
  std::string line;
  std::getline(std::cin, line);
  return trim(line);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dejean::BinaryWord parse_binary(const std::string& text) {
  try {
    return dejean::BinaryWord::parse(text);
  } catch (const dejean::parse_error& e) {
    throw usage_error(std::string("malformed binary word: ") + e.what());
  }
}

dejean::SigmaWord parse_sigma(const std::string& text, int n) {
  try {
    return dejean::SigmaWord::parse(text, n);
  } catch (const dejean::parse_error& e) {
    throw usage_error(std::string("malformed word: ") + e.what());
  }
}

// Symbols for the exponent command: dot/space separated integers, or one
// symbol per character.
std::vector<long> parse_symbols(const std::string& text) {
  std::vector<long> out;
  if (text.find_first_of(". \t") == std::string::npos) {
    for (unsigned char c : text) out.push_back(c);
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '.' || c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c < '0' || c > '9') throw usage_error("malformed word at position " + std::to_string(i) + ": expected a decimal symbol");
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw usage_error("malformed word at position " + std::to_string(i) + ": symbol too large");
      ++i;
    }
    out.push_back(v);
  }
  return out;
}

struct VerifyArgs {
  std::string target;
  bool json = false;
  bool mirror = false;
  bool unbounded = false;
  bool sequential = false;
  std::optional<std::string> morphism_file;
};

int cmd_verify(const VerifyArgs& a) {
  std::map<int, dejean::UniformMorphism> pool;
  for (const auto& h : dejean::builtin_morphisms()) pool.emplace(h.n(), h);
  std::optional<std::string> file = a.morphism_file;
  if (!file) {
    if (const char* env = std::getenv("DEJEAN_MORPHISMS"); env && *env) file = env;
  }
  std::vector<int> from_file;
  if (file) {
    try {
      for (auto& h : dejean::parse_morphism_file(read_file(*file))) {
        from_file.push_back(h.n());
        pool.insert_or_assign(h.n(), std::move(h));
      }
    } catch (const dejean::morphism_parse_error& e) {
      throw usage_error(*file + ": " + e.what());
    } catch (const dejean::precondition_error& e) {
      throw usage_error(*file + ": " + e.what());
    }
  }

  std::vector<dejean::UniformMorphism> todo;
  if (a.target == "all") {
    if (file) {
      for (int n : from_file) todo.push_back(pool.at(n));
    } else {
      for (const auto& h : dejean::builtin_morphisms()) todo.push_back(h);
    }
  } else {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(a.target, &used);
      if (used != a.target.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw usage_error("verify: expected n or \"all\", got \"" + a.target + "\"");
    }
    auto it = pool.find(n);
    if (it == pool.end())
      throw usage_error("verify: no morphism for n=" + std::to_string(n) + " (embedded: 15..26; use --morphism-file)");
    todo.push_back(it->second);
  }
  if (todo.empty()) throw usage_error("verify: no morphisms to check");
  if (a.mirror) {
    for (auto& h : todo) h = dejean::mirror(h);
  }

  dejean::VerifyOptions opts;
  opts.bounded_kernel_scan = !a.unbounded;
  std::vector<std::future<dejean::VerificationReport>> jobs;
  for (const auto& h : todo) {
    jobs.push_back(std::async(a.sequential ? std::launch::deferred : std::launch::async,
                              [h, &opts] { return dejean::verify(h, opts); }));
  }
  std::vector<dejean::VerificationReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  std::ranges::stable_sort(reports, {}, &dejean::VerificationReport::n);

  bool all_pass = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    all_pass = all_pass && rep.overall();
    if (a.json) {
      std::cout << dejean::to_json(rep).dump() << '\n';
    } else {
      if (i > 0) std::cout << '\n';
      std::cout << dejean::to_text(rep, i == 0);
    }
  }
  std::cout.flush();
  return all_pass ? kOk : kFail;
}

struct SearchArgs {
  int n = 0;
  std::optional<std::size_t> length;
  std::size_t limit = 1;
  std::size_t workers = 1;
  bool progress = false;
};

int cmd_search(const SearchArgs& a) {
  if (a.n < 3 || a.n > dejean::SigmaWord::kMaxAlphabet) throw usage_error("search: n must lie in 3..255");
  const std::size_t length = a.length.value_or(dejean::default_search_length(a.n));
  if (length == 0) throw usage_error("search: --length must be positive");
  dejean::SearchOptions opts;
  opts.workers = std::max<std::size_t>(a.workers, 1);
  if (a.progress) opts.progress = &std::cerr;
  std::cerr << "search n=" << a.n << " length=" << length << " limit=" << a.limit << " workers=" << opts.workers << '\n';
  if (a.limit == 0) throw usage_error("search: --limit must be positive");
  const auto found = dejean::search_convenient(a.n, length, a.limit, opts);
  std::cout << dejean::emit_morphism_file(found);
  std::cout.flush();
  std::cerr << "found " << found.size() << '\n';
  return found.empty() ? kFail : kOk;
}

int cmd_encode(const std::optional<std::string>& word, int n) {
  const auto v = parse_sigma(read_word(word), n);
  try {
    std::cout << dejean::encode(v).str() << '\n';
  } catch (const dejean::precondition_error& e) {
    throw usage_error(e.what());
  }
  return kOk;
}

int cmd_decode(const std::optional<std::string>& word, int n, const std::optional<std::string>& prefix) {
  const auto b = parse_binary(read_word(word));
  const auto p = prefix ? parse_sigma(*prefix, n) : dejean::canonical_prefix(n);
  try {
    std::cout << dejean::decode(b, p).str() << '\n';
  } catch (const dejean::precondition_error& e) {
    throw usage_error(e.what());
  }
  return kOk;
}

int cmd_exponent(const std::optional<std::string>& word) {
  const auto text = read_word(word);
  if (text.empty()) throw usage_error("exponent: empty word");
  const auto symbols = parse_symbols(text);
  const auto best = dejean::max_exponent(symbols);
  std::cout << best.exponent.str() << '\n';
  if (best.witness) std::cout << best.witness->str() << '\n';
  return kOk;
}

int cmd_kernel_scan(const std::optional<std::string>& word, int n, std::optional<std::size_t> max_period) {
  const auto b = parse_binary(read_word(word));
  for (const auto& occ : dejean::find_kernel_repetitions(b, n, max_period)) std::cout << occ.str() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for Dejean's conjecture, n = 15..26"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("n", va.target, "n, or \"all\"")->required();
  verify->add_flag("--json", va.json, "One JSON report per line");
  verify->add_option("--morphism-file", va.morphism_file, "Stanza file (default: $DEJEAN_MORPHISMS)");
  verify->add_flag("--mirror", va.mirror, "Swap the roles of 0 and 1 in the images before checking");
  verify->add_flag("--unbounded-kernel-scan", va.unbounded, "Scan kernel periods without the 9n^2-6n+1 cap");
  verify->add_flag("--sequential", va.sequential, "Verify one n at a time");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search for convenient morphisms");
  search->add_option("n", sa.n)->required();
  search->add_option("--length", sa.length, "Image length (default 4n-4, 4n for n=21)");
  search->add_option("--limit", sa.limit, "Stop after this many morphisms")->capture_default_str();
  search->add_option("--workers", sa.workers, "Worker threads")->capture_default_str();
  search->add_flag("--progress", sa.progress, "Progress lines on stderr");

  std::optional<std::string> word;
  int n = 0;
  std::optional<std::string> prefix;
  std::optional<std::size_t> max_period;

  auto* encode = app.add_subcommand("encode", "Pansiot encoding of a word over {1..n}");
  encode->add_option("word", word, "Word (default: first line of stdin)");
  encode->add_option("--n", n)->required()->check(CLI::Range(2, 255));

  auto* decode = app.add_subcommand("decode", "Word over {1..n} with the given encoding");
  decode->add_option("word", word, "Binary word (default: first line of stdin)");
  decode->add_option("--n", n)->required()->check(CLI::Range(2, 255));
  decode->add_option("--prefix", prefix, "First n-1 letters (default 1 2 ... n-1)");

  auto* exponent = app.add_subcommand("exponent", "Maximal exponent of a word");
  exponent->add_option("word", word, "Word (default: first line of stdin)");

  auto* kernel = app.add_subcommand("kernel-scan", "Kernel repetitions of a binary word");
  kernel->add_option("word", word, "Binary word (default: first line of stdin)");
  kernel->add_option("--n", n)->required()->check(CLI::Range(2, 255));
  kernel->add_option("--max-period", max_period, "Skip longer periods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*search) return cmd_search(sa);
    if (*encode) return cmd_encode(word, n);
    if (*decode) return cmd_decode(word, n, prefix);
    if (*exponent) return cmd_exponent(word);
    if (*kernel) return cmd_kernel_scan(word, n, max_period);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
