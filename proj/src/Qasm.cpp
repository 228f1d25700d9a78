#include "qroute/Qasm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qroute {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  int line = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skipIgnorable();
    Token tok;
    tok.line = line_;
    if (pos_ >= text_.size()) {
      return tok;
    }
    const char ch = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      tok.kind = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        tok.text += text_[pos_++];
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      tok.kind = Token::Number;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > 0 &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
        tok.text += text_[pos_++];
      }
      return tok;
    }
    if (ch == '"') {
      tok.kind = Token::Ident; // string literal, only used by include
      ++pos_;
      tok.text = "\"";
      while (pos_ < text_.size() && text_[pos_] != '"') {
        tok.text += text_[pos_++];
      }
      if (pos_ < text_.size()) {
        ++pos_;
      }
      tok.text += '"';
      return tok;
    }
    tok.kind = Token::Punct;
    if (ch == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok.text = "->";
      pos_ += 2;
      return tok;
    }
    tok.text = std::string(1, ch);
    ++pos_;
    return tok;
  }

private:
  void skipIgnorable() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (ch == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

// Evaluates the arithmetic subset used by qelib1-style parameters:
// numbers, pi, unary minus, + - * /, parentheses.
class ParamEvaluator {
public:
  explicit ParamEvaluator(const std::string& text) : text_(text) {}

  double evaluate(int line) {
    line_ = line;
    const double value = parseSum();
    skipSpace();
    if (pos_ != text_.size()) {
      throw QasmError(line_, "bad parameter expression: " + text_);
    }
    return value;
  }

private:
  double parseSum() {
    double value = parseProduct();
    while (true) {
      skipSpace();
      if (peek() == '+') {
        ++pos_;
        value += parseProduct();
      } else if (peek() == '-') {
        ++pos_;
        value -= parseProduct();
      } else {
        return value;
      }
    }
  }

  double parseProduct() {
    double value = parseAtom();
    while (true) {
      skipSpace();
      if (peek() == '*') {
        ++pos_;
        value *= parseAtom();
      } else if (peek() == '/') {
        ++pos_;
        value /= parseAtom();
      } else {
        return value;
      }
    }
  }

  double parseAtom() {
    skipSpace();
    if (peek() == '-') {
      ++pos_;
      return -parseAtom();
    }
    if (peek() == '+') {
      ++pos_;
      return parseAtom();
    }
    if (peek() == '(') {
      ++pos_;
      const double value = parseSum();
      skipSpace();
      if (peek() != ')') {
        throw QasmError(line_, "unbalanced parentheses in parameter");
      }
      ++pos_;
      return value;
    }
    if (text_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return M_PI;
    }
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(text_.substr(pos_), &used);
    } catch (const std::exception&) {
      throw QasmError(line_, "bad parameter expression: " + text_);
    }
    pos_ += used;
    return value;
  }

  void skipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[nodiscard]] char peek() const {
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  ParsedProgram run() {
    while (cur_.kind != Token::End) {
      statement();
    }
    if (program_.qubitCount == 0) {
      throw QasmError(cur_.line, "program declares no qreg");
    }
    return program_;
  }

private:
  void statement() {
    if (cur_.kind != Token::Ident) {
      throw QasmError(cur_.line, "expected statement, got '" + cur_.text +
                                     "'");
    }
    const std::string head = cur_.text;
    const int line = cur_.line;
    if (head == "OPENQASM") {
      advance();
      expect(Token::Number, "version number");
      expectPunct(";");
      return;
    }
    if (head == "include") {
      advance();
      advance(); // file name literal
      expectPunct(";");
      return;
    }
    if (head == "qreg") {
      advance();
      parseQreg(line);
      return;
    }
    if (head == "creg") {
      advance();
      parseCreg(line);
      return;
    }
    if (head == "measure") {
      advance();
      parseMeasure(line);
      return;
    }
    if (head == "barrier") {
      advance();
      parseBarrier(line);
      return;
    }
    if (head == "gate" || head == "opaque" || head == "if" ||
        head == "reset") {
      throw QasmError(line, "unsupported statement: " + head);
    }
    parseGate(head, line);
  }

  void parseQreg(int line) {
    if (program_.qubitCount != 0) {
      throw QasmError(line, "multiple quantum registers are not supported");
    }
    expectIdentInto(qregName_);
    program_.qubitCount = parseIndexDecl(line);
    expectPunct(";");
  }

  void parseCreg(int line) {
    std::string name;
    expectIdentInto(name);
    const int size = parseIndexDecl(line);
    if (!program_.cregName.empty()) {
      // Keep the first; extra classical registers do not affect mapping.
      skipToSemicolon();
      return;
    }
    program_.cregName = name;
    program_.cregSize = size;
    expectPunct(";");
  }

  void parseMeasure(int line) {
    RawGate gate;
    gate.kind = GateKind::Measure;
    gate.name = "measure";
    gate.sourceLine = line;
    gate.qubits.push_back(parseQubitRef(line));
    expectPunct("->");
    std::string cname;
    expectIdentInto(cname);
    gate.cbit = parseIndexDecl(line);
    expectPunct(";");
    program_.gates.push_back(std::move(gate));
  }

  void parseBarrier(int line) {
    RawGate gate;
    gate.kind = GateKind::Barrier;
    gate.name = "barrier";
    gate.sourceLine = line;
    // barrier q; expands to the whole register
    if (cur_.kind == Token::Ident && peekIsRegisterOnly()) {
      advance();
      for (int q = 0; q < program_.qubitCount; ++q) {
        gate.qubits.push_back(q);
      }
    } else {
      gate.qubits.push_back(parseQubitRef(line));
      while (cur_.text == ",") {
        advance();
        gate.qubits.push_back(parseQubitRef(line));
      }
    }
    expectPunct(";");
    checkDistinct(gate, line);
    program_.gates.push_back(std::move(gate));
  }

  void parseGate(const std::string& name, int line) {
    advance();
    RawGate gate;
    gate.name = name;
    gate.sourceLine = line;
    if (cur_.text == "(") {
      parseParams(gate, line);
    }
    gate.qubits.push_back(parseQubitRef(line));
    while (cur_.text == ",") {
      advance();
      gate.qubits.push_back(parseQubitRef(line));
    }
    expectPunct(";");

    const bool twoQubitOp = (name == "cx" || name == "swap");
    if (gate.qubits.size() >= 3 || (twoQubitOp && gate.qubits.size() != 2)) {
      throw QasmError(line, "gate '" + name + "' with " +
                                std::to_string(gate.qubits.size()) +
                                " qubits is not supported");
    }
    if (!twoQubitOp && gate.qubits.size() == 2) {
      throw QasmError(line, "unsupported two-qubit gate: " + name);
    }
    gate.kind = twoQubitOp ? GateKind::TwoQubit : GateKind::SingleQubit;
    checkDistinct(gate, line);
    program_.gates.push_back(std::move(gate));
  }

  void parseParams(RawGate& gate, int line) {
    advance(); // '('
    int depth = 1;
    std::string current;
    while (depth > 0) {
      if (cur_.kind == Token::End) {
        throw QasmError(line, "unterminated parameter list");
      }
      if (cur_.text == "(") {
        ++depth;
      } else if (cur_.text == ")") {
        --depth;
        if (depth == 0) {
          advance();
          break;
        }
      } else if (cur_.text == "," && depth == 1) {
        gate.paramText.push_back(current);
        current.clear();
        advance();
        continue;
      }
      current += cur_.text;
      advance();
    }
    gate.paramText.push_back(current);
    for (const auto& text : gate.paramText) {
      gate.params.push_back(ParamEvaluator(text).evaluate(line));
    }
  }

  int parseQubitRef(int line) {
    std::string reg;
    expectIdentInto(reg);
    if (reg != qregName_) {
      throw QasmError(line, "unknown quantum register: " + reg);
    }
    const int index = parseIndexDecl(line);
    if (index < 0 || index >= program_.qubitCount) {
      throw QasmError(line, "qubit index " + std::to_string(index) +
                                " out of range [0, " +
                                std::to_string(program_.qubitCount) + ")");
    }
    return index;
  }

  // Parses "[<int>]" and returns the integer.
  int parseIndexDecl(int line) {
    expectPunct("[");
    if (cur_.kind != Token::Number) {
      throw QasmError(line, "expected index, got '" + cur_.text + "'");
    }
    int value = 0;
    try {
      value = std::stoi(cur_.text);
    } catch (const std::exception&) {
      throw QasmError(line, "bad index: " + cur_.text);
    }
    advance();
    expectPunct("]");
    return value;
  }

  void checkDistinct(const RawGate& gate, int line) {
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
      for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
        if (gate.qubits[i] == gate.qubits[j]) {
          throw QasmError(line, "repeated qubit q[" +
                                    std::to_string(gate.qubits[i]) +
                                    "] in one gate");
        }
      }
    }
  }

  [[nodiscard]] bool peekIsRegisterOnly() {
    // Distinguish `barrier q;` from `barrier q[0], ...;`
    Lexer save = lexer_;
    const Token after = save.next();
    return after.text == ";" || after.text == ",";
  }

  void skipToSemicolon() {
    while (cur_.kind != Token::End && cur_.text != ";") {
      advance();
    }
    if (cur_.text == ";") {
      advance();
    }
  }

  void expectIdentInto(std::string& out) {
    if (cur_.kind != Token::Ident) {
      throw QasmError(cur_.line, "expected identifier, got '" + cur_.text +
                                     "'");
    }
    out = cur_.text;
    advance();
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (cur_.kind != kind) {
      throw QasmError(cur_.line, "expected " + what + ", got '" + cur_.text +
                                     "'");
    }
    advance();
  }

  void expectPunct(const std::string& text) {
    if (cur_.kind != Token::Punct || cur_.text != text) {
      throw QasmError(cur_.line, "expected '" + text + "', got '" +
                                     cur_.text + "'");
    }
    advance();
  }

  void advance() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_;
  ParsedProgram program_;
  std::string qregName_;
};

void writeGate(std::ostringstream& out, const RawGate& gate,
               const std::string& cregName) {
  if (gate.kind == GateKind::Measure) {
    out << "measure q[" << gate.qubits[0] << "] -> " << cregName << "["
        << gate.cbit << "];\n";
    return;
  }
  out << gate.name;
  if (!gate.paramText.empty()) {
    out << "(";
    for (std::size_t i = 0; i < gate.paramText.size(); ++i) {
      if (i != 0) {
        out << ",";
      }
      out << gate.paramText[i];
    }
    out << ")";
  }
  out << " ";
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (i != 0) {
      out << ",";
    }
    out << "q[" << gate.qubits[i] << "]";
  }
  out << ";\n";
}

} // namespace

ParsedProgram parseQasm(const std::string& text) {
  return Parser(text).run();
}

ParsedProgram parseQasmFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw QasmError(0, "cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseQasm(buffer.str());
}

std::string emitQasm(const std::vector<PhysicalOp>& ops, int qubitCount,
                     const std::string& cregName, int cregSize,
                     bool decomposeSwaps) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << qubitCount << "];\n";
  if (!cregName.empty() && cregSize > 0) {
    out << "creg " << cregName << "[" << cregSize << "];\n";
  }
  for (const auto& op : ops) {
    if (op.gate.name == "swap" && decomposeSwaps) {
      const int u = op.gate.qubits[0];
      const int v = op.gate.qubits[1];
      out << "cx q[" << u << "],q[" << v << "];\n";
      out << "cx q[" << v << "],q[" << u << "];\n";
      out << "cx q[" << u << "],q[" << v << "];\n";
      continue;
    }
    writeGate(out, op.gate, cregName);
  }
  return out.str();
}

} // namespace qroute
