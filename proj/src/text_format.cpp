#include "treeminor/text_format.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "treeminor/errors.hpp"

namespace treeminor {
namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) tokens.push_back({word, number});
  }
  return tokens;
}

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ == tokens_.size(); }

  const Token& next(const char* expecting) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + expecting);
    return tokens_[pos_++];
  }

  int next_int(const char* expecting) {
    const Token& tok = next(expecting);
    int value = 0;
    auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || end != tok.text.data() + tok.text.size()) {
      throw ParseError("line " + std::to_string(tok.line) + ": expected " + expecting +
                       ", got '" + tok.text + "'");
    }
    return value;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

TreeRecord read_record(TokenCursor& cur) {
  const Token& head = cur.next("'tree' or 'rtree'");
  bool rooted = false;
  if (head.text == "rtree") {
    rooted = true;
  } else if (head.text != "tree") {
    throw ParseError("line " + std::to_string(head.line) + ": expected 'tree' or 'rtree', got '" +
                     head.text + "'");
  }
  const int n = cur.next_int("vertex count");
  if (n < 1) throw ParseError("line " + std::to_string(head.line) + ": vertex count must be >= 1");
  std::optional<Vertex> root;
  if (rooted) root = cur.next_int("root");

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    Vertex u = cur.next_int("edge endpoint");
    Vertex v = cur.next_int("edge endpoint");
    edges.emplace_back(u, v);
  }
  try {
    TreeRecord rec{Tree(n, std::move(edges)), root};
    if (root) RootedTree(rec.tree, *root);
    return rec;
  } catch (const InvalidTree& e) {
    throw ParseError("line " + std::to_string(head.line) + ": " + e.what());
  }
}

}  // namespace

RootedTree TreeRecord::as_rooted() const {
  if (!root) throw ParseError("expected an rtree record");
  return RootedTree(tree, *root);
}

std::vector<TreeRecord> parse_records(std::istream& in) {
  TokenCursor cur(tokenize(in));
  std::vector<TreeRecord> out;
  while (!cur.done()) out.push_back(read_record(cur));
  return out;
}

std::vector<TreeRecord> parse_records(const std::string& text) {
  std::istringstream in(text);
  return parse_records(in);
}

TreeRecord parse_record(std::istream& in) {
  auto records = parse_records(in);
  if (records.size() != 1) {
    throw ParseError("expected exactly one tree record, found " + std::to_string(records.size()));
  }
  return std::move(records.front());
}

TreeRecord parse_record(const std::string& text) {
  std::istringstream in(text);
  return parse_record(in);
}

std::string format_tree(const Tree& t) {
  std::string out = "tree " + std::to_string(t.size()) + "\n";
  for (auto [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string format_tree(const RootedTree& rt) {
  std::string out =
      "rtree " + std::to_string(rt.size()) + " " + std::to_string(rt.root()) + "\n";
  for (auto [u, v] : rt.tree().edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace treeminor
