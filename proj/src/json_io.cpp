#include "altcf/json_io.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace altcf {

namespace {

std::string rat_json(const Rat& r) { return r.is_integer() ? r.str() : "\"" + r.str() + "\""; }

// Parsed JSON with integers kept exact.
struct Node {
  enum class Kind { Null, Bool, Int, Str, Array, Object } kind = Kind::Null;
  Integer num;
  std::string str;
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> fields;

  const Node& field(const std::string& key) const {
    for (const auto& [k, v] : fields) {
      if (k == key) return v;
    }
    throw std::invalid_argument("missing field \"" + key + "\"");
  }
};

class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
public:
  bool null() override { return put(Node{}); }
  bool boolean(bool) override { return put(Node{Node::Kind::Bool}); }
  bool number_integer(number_integer_t v) override { return put_int(Integer(static_cast<long>(v))); }
  bool number_unsigned(number_unsigned_t v) override { return put_int(Integer(static_cast<unsigned long>(v))); }
  bool number_float(number_float_t, const string_t& raw) override {
    // Integer literals beyond 64 bits arrive here with their original text.
    if (raw.find_first_of(".eE") != std::string::npos) throw std::invalid_argument("non-integer number " + raw);
    return put_int(parse_integer(raw));
  }
  bool string(string_t& v) override {
    Node n{Node::Kind::Str};
    n.str = v;
    return put(std::move(n));
  }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override {
    stack_.push_back(Node{Node::Kind::Object});
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    stack_.push_back(Node{Node::Kind::Array});
    return true;
  }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    throw std::invalid_argument(std::string("malformed JSON: ") + ex.what());
  }

  Node result() && { return std::move(root_); }

private:
  bool put_int(Integer v) {
    Node n{Node::Kind::Int};
    n.num = std::move(v);
    return put(std::move(n));
  }
  bool put(Node n) {
    if (stack_.empty()) {
      root_ = std::move(n);
    } else if (stack_.back().kind == Node::Kind::Array) {
      stack_.back().items.push_back(std::move(n));
    } else {
      stack_.back().fields.emplace_back(key_, std::move(n));
    }
    return true;
  }
  bool close() {
    Node done = std::move(stack_.back());
    stack_.pop_back();
    return put(std::move(done));
  }

  std::vector<Node> stack_;
  std::string key_;
  Node root_;
};

Node parse_tree(std::string_view text) {
  TreeBuilder b;
  nlohmann::json::sax_parse(text.begin(), text.end(), &b);
  return std::move(b).result();
}

const std::vector<Node>& as_array(const Node& n, const char* what) {
  if (n.kind != Node::Kind::Array) throw std::invalid_argument(std::string(what) + " must be a JSON array");
  return n.items;
}

const Integer& as_int(const Node& n) {
  if (n.kind != Node::Kind::Int) throw std::invalid_argument("expected an integer");
  return n.num;
}

Rat as_rat(const Node& n) {
  if (n.kind == Node::Kind::Int) return Rat(n.num);
  if (n.kind == Node::Kind::Str) return Rat::parse(n.str);
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

}  // namespace

std::string integer_array_json(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out + "]";
}

std::string gcf_json(const std::vector<Element>& elements) {
  std::string out = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += "[" + rat_json(elements[i].b) + "," + rat_json(elements[i].a) + "]";
  }
  return out + "]";
}

std::string partial_sums_json(const std::vector<PartialSum>& sums) {
  std::string out = "[";
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto& s = sums[i];
    if (i) out += ',';
    out += "{\"n\":" + std::to_string(s.n) + ",\"num\":" + to_string(s.sum.num()) + ",\"den\":" +
           to_string(s.sum.den()) + ",\"tail_num\":" + to_string(s.tail_bound.num()) +
           ",\"tail_den\":" + to_string(s.tail_bound.den()) + "}";
  }
  return out + "]";
}

std::vector<Integer> parse_integer_array_json(std::string_view text) {
  std::vector<Integer> out;
  Node tree = parse_tree(text);
  for (const auto& n : as_array(tree, "continued fraction")) out.push_back(as_int(n));
  return out;
}

std::vector<Element> parse_gcf_json(std::string_view text) {
  std::vector<Element> out;
  Node tree = parse_tree(text);
  for (const auto& pair : as_array(tree, "continued fraction")) {
    const auto& ba = as_array(pair, "element");
    if (ba.size() != 2) throw std::invalid_argument("element must be [b, a]");
    out.push_back({as_rat(ba[0]), as_rat(ba[1])});
  }
  return out;
}

std::vector<PartialSum> parse_partial_sums_json(std::string_view text) {
  std::vector<PartialSum> out;
  Node tree = parse_tree(text);
  for (const auto& rec : as_array(tree, "partial sums")) {
    const Integer& n = as_int(rec.field("n"));
    if (n < 0 || !n.fits_ulong_p()) throw std::invalid_argument("bad index");
    out.push_back({static_cast<std::size_t>(n.get_ui()), Rat(as_int(rec.field("num")), as_int(rec.field("den"))),
                   Rat(as_int(rec.field("tail_num")), as_int(rec.field("tail_den")))});
  }
  return out;
}

}  // namespace altcf
