// Copyright 2026 The WalkForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walkforge/circuit_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "walkforge/error.hpp"

namespace walkforge {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

GateKind kind_from_string(const std::string& s) {
  if (s == "h") return GateKind::Hadamard;
  if (s == "x") return GateKind::Not;
  if (s == "phase2") return GateKind::Phase2;
  if (s == "gphase") return GateKind::GlobalPhase;
  throw ParseError(0, {"h", "x", "phase2", "gphase"}, s);
}

[[noreturn]] void bad_input(const std::string& what) {
  throw IoError("malformed circuit: " + what);
}

}  // namespace

std::string to_json(const Circuit& c) {
  std::ostringstream os;
  os << "{\"wires\":" << c.wires() << ",\"gates\":[";
  bool first = true;
  for (const auto& g : c.gates()) {
    if (!first) os << ",";
    first = false;
    os << "{\"kind\":\"" << to_string(g.kind) << "\",\"wire\":";
    if (g.kind == GateKind::GlobalPhase) {
      os << "null";
    } else {
      os << g.target;
    }
    os << ",\"params\":[";
    if (g.kind == GateKind::Phase2) {
      os << format_double(g.theta1) << "," << format_double(g.theta2);
    } else if (g.kind == GateKind::GlobalPhase) {
      os << format_double(g.theta1);
    }
    os << "],\"controls\":[";
    for (std::size_t k = 0; k < g.controls.size(); ++k) {
      if (k) os << ",";
      os << "[" << g.controls[k].wire << ","
         << (g.controls[k].polarity == Polarity::OnOne ? 1 : 0) << "]";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

Circuit circuit_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad_input(e.what());
  }
  try {
    Circuit c(j.at("wires").get<int>());
    for (const auto& jg : j.at("gates")) {
      Gate g;
      g.kind = kind_from_string(jg.at("kind").get<std::string>());
      const auto& params = jg.at("params");
      if (g.kind == GateKind::GlobalPhase) {
        if (!jg.at("wire").is_null()) bad_input("gphase must have a null wire");
        if (params.size() != 1) bad_input("gphase takes one parameter");
        g.target = -1;
        g.theta1 = params[0].get<double>();
      } else {
        g.target = jg.at("wire").get<int>();
        if (g.kind == GateKind::Phase2) {
          if (params.size() != 2) bad_input("phase2 takes two parameters");
          g.theta1 = params[0].get<double>();
          g.theta2 = params[1].get<double>();
        } else if (!params.empty()) {
          bad_input("h and x take no parameters");
        }
      }
      for (const auto& jc : jg.at("controls")) {
        if (jc.size() != 2) bad_input("control must be [wire, polarity]");
        const int pol = jc[1].get<int>();
        if (pol != 0 && pol != 1) bad_input("control polarity must be 0 or 1");
        g.controls.push_back({jc[0].get<int>(), pol == 1 ? Polarity::OnOne : Polarity::OnZero});
      }
      c.add(std::move(g));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    bad_input(e.what());
  }
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "qreg q[" << c.wires() << "]\n";
  for (const auto& g : c.gates()) {
    for (const auto& k : g.controls) {
      os << (k.polarity == Polarity::OnOne ? "ctrl+" : "ctrl-") << " q[" << k.wire << "] @ ";
    }
    switch (g.kind) {
      case GateKind::Hadamard: os << "h q[" << g.target << "]"; break;
      case GateKind::Not: os << "x q[" << g.target << "]"; break;
      case GateKind::Phase2:
        os << "rz-pair(" << format_double(g.theta1) << "," << format_double(g.theta2)
           << ") q[" << g.target << "]";
        break;
      case GateKind::GlobalPhase: os << "gphase(" << format_double(g.theta1) << ")"; break;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

// Minimal cursor over one line of the text dialect.
class LineReader {
 public:
  LineReader(const std::string& line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool try_consume(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!try_consume(tok)) fail("expected '" + tok + "'");
  }
  int read_int() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || errno != 0) fail("expected an integer");
    pos_ += static_cast<std::size_t>(end - begin);
    return static_cast<int>(v);
  }
  double read_double() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  int read_wire() {
    expect("q[");
    const int w = read_int();
    expect("]");
    return w;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw IoError("circuit text line " + std::to_string(line_no_) + ", column " +
                  std::to_string(pos_ + 1) + ": " + what);
  }

 private:
  const std::string& s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Circuit circuit_from_qasm(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<Circuit> circuit;
  while (std::getline(is, line)) {
    ++line_no;
    LineReader r(line, line_no);
    if (r.at_end() || r.try_consume("//")) continue;
    if (!circuit) {
      r.expect("qreg");
      const int wires = r.read_wire();
      if (!r.at_end() && !r.try_consume("//")) r.fail("trailing characters");
      circuit.emplace(wires);
      continue;
    }
    std::vector<Control> controls;
    while (true) {
      Polarity pol;
      if (r.try_consume("ctrl+")) {
        pol = Polarity::OnOne;
      } else if (r.try_consume("ctrl-")) {
        pol = Polarity::OnZero;
      } else {
        break;
      }
      const int w = r.read_wire();
      r.expect("@");
      controls.push_back({w, pol});
    }
    Gate g;
    if (r.try_consume("h ") || r.try_consume("h\t")) {
      g = Gate::hadamard(r.read_wire());
    } else if (r.try_consume("x ") || r.try_consume("x\t")) {
      g = Gate::not_gate(r.read_wire());
    } else if (r.try_consume("rz-pair(")) {
      const double a = r.read_double();
      r.expect(",");
      const double b = r.read_double();
      r.expect(")");
      g = Gate::phase2(r.read_wire(), a, b);
    } else if (r.try_consume("gphase(")) {
      const double a = r.read_double();
      r.expect(")");
      g = Gate::global_phase(a);
    } else {
      r.fail("expected h, x, rz-pair or gphase");
    }
    if (!r.at_end() && !r.try_consume("//")) r.fail("trailing characters");
    g.controls = std::move(controls);
    circuit->add(std::move(g));
  }
  if (!circuit) throw IoError("circuit text has no qreg header");
  return *circuit;
}

}  // namespace walkforge
