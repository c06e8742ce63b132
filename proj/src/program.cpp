#include "stenum/program.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>

namespace stenum {

bool Clause::inPosBody(AtomId a) const { return std::binary_search(posBody.begin(), posBody.end(), a); }
bool Clause::inNegBody(AtomId a) const { return std::binary_search(negBody.begin(), negBody.end(), a); }

bool Clause::isTautology() const {
	if (head == noHead) return false;
	if (inPosBody(head)) return true;
	// sorted ranges: any common atom?
	auto i = posBody.begin();
	auto j = negBody.begin();
	while (i != posBody.end() && j != negBody.end()) {
		if (*i == *j) return true;
		if (*i < *j) ++i; else ++j;
	}
	return false;
}

bool Clause::isVirtualConstraint() const { return head != noHead && inNegBody(head); }

AtomId AtomTable::intern(std::string_view name) {
	auto it = ids_.find(std::string(name));
	if (it != ids_.end()) return it->second;
	AtomId id = AtomId(names_.size());
	names_.emplace_back(name);
	ids_.emplace(names_.back(), id);
	return id;
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
	auto it = ids_.find(std::string(name));
	if (it == ids_.end()) return std::nullopt;
	return it->second;
}

Program::Program() : symbols_(std::make_shared<AtomTable>()) {}

Program::Program(std::shared_ptr<const AtomTable> symbols, std::vector<Clause> clauses)
	: symbols_(std::move(symbols)), clauses_(std::move(clauses)) {
	assert(symbols_);
	occ_.resize(size_t(symbols_->size()));
	for (int id = 0; id < int(clauses_.size()); ++id) {
		const Clause& c = clauses_[size_t(id)];
		assert(std::is_sorted(c.posBody.begin(), c.posBody.end()));
		assert(std::is_sorted(c.negBody.begin(), c.negBody.end()));
		assert(std::adjacent_find(c.posBody.begin(), c.posBody.end()) == c.posBody.end());
		assert(std::adjacent_find(c.negBody.begin(), c.negBody.end()) == c.negBody.end());
		if (c.head != Clause::noHead) {
			assert(c.head >= 0 && c.head < symbols_->size());
			occ_[size_t(c.head)].asHead.push_back(id);
			++size_;
		}
		for (AtomId a : c.posBody) {
			assert(a >= 0 && a < symbols_->size());
			occ_[size_t(a)].inPos.push_back(id);
			++size_;
		}
		for (AtomId a : c.negBody) {
			assert(a >= 0 && a < symbols_->size());
			occ_[size_t(a)].inNeg.push_back(id);
			++size_;
		}
	}
	for (const Occurrences& o : occ_)
		if (!o.empty()) ++occurringAtoms_;
}

ProgramClass classify(const Program& p) {
	ProgramClass cls;
	std::vector<std::pair<AtomId, AtomId>> negUnit; // (head, body atom) of a :- not b.
	for (const Clause& c : p.clauses()) {
		cls.width = std::max(cls.width, c.width());
		if (!c.posBody.empty()) cls.purelyNegative = false;
		if (c.isConstraint()) cls.definite = false;
		else if (c.posBody.empty() && c.negBody.size() == 1)
			negUnit.emplace_back(c.head, c.negBody.front());
	}
	std::sort(negUnit.begin(), negUnit.end());
	for (const auto& [h, b] : negUnit) {
		if (h < b && std::binary_search(negUnit.begin(), negUnit.end(), std::make_pair(b, h))) {
			cls.hasDualPair = true;
			break;
		}
	}
	return cls;
}

ParseError::ParseError(int line, int column, const std::string& what)
	: std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
	  line(line), column(column) {}

namespace {

class Lexer {
public:
	enum class Tok { Ident, Dot, Comma, ImpliedBy, End };

	explicit Lexer(std::istream& in) : in_(in) { advance(); }

	Tok tok() const { return tok_; }
	const std::string& ident() const { return ident_; }
	int line() const { return tokLine_; }
	int column() const { return tokCol_; }

	void advance() {
		skipIgnored();
		tokLine_ = line_;
		tokCol_ = col_;
		int ch = peek();
		if (ch == EOF) { tok_ = Tok::End; return; }
		if (ch == '.') { get(); tok_ = Tok::Dot; return; }
		if (ch == ',') { get(); tok_ = Tok::Comma; return; }
		if (ch == ':') {
			get();
			if (peek() != '-') throw ParseError(tokLine_, tokCol_, "expected ':-'");
			get();
			tok_ = Tok::ImpliedBy;
			return;
		}
		if (isIdentStart(ch)) {
			ident_.clear();
			while (isIdentChar(peek())) ident_.push_back(char(get()));
			tok_ = Tok::Ident;
			return;
		}
		throw ParseError(tokLine_, tokCol_, std::string("unexpected character '") + char(ch) + "'");
	}

private:
	static bool isIdentStart(int ch) { return ch == '_' || (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z'); }
	static bool isIdentChar(int ch) { return isIdentStart(ch) || (ch >= '0' && ch <= '9'); }

	int peek() { return in_.peek(); }
	int get() {
		int ch = in_.get();
		if (ch == '\n') { ++line_; col_ = 1; }
		else if (ch != EOF) ++col_;
		return ch;
	}

	void skipIgnored() {
		for (;;) {
			int ch = peek();
			if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') { get(); continue; }
			if (ch == '%') {
				while (peek() != '\n' && peek() != EOF) get();
				continue;
			}
			break;
		}
	}

	std::istream& in_;
	Tok tok_ = Tok::End;
	std::string ident_;
	int line_ = 1, col_ = 1;
	int tokLine_ = 1, tokCol_ = 1;
};

void insertUnique(std::vector<AtomId>& v, AtomId a) {
	auto it = std::lower_bound(v.begin(), v.end(), a);
	if (it == v.end() || *it != a) v.insert(it, a);
}

} // namespace

Program parseProgram(std::istream& in) {
	auto symbols = std::make_shared<AtomTable>();
	std::vector<Clause> clauses;
	Lexer lex(in);

	auto parseBody = [&](Clause& c) {
		for (;;) {
			if (lex.tok() != Lexer::Tok::Ident)
				throw ParseError(lex.line(), lex.column(), "expected body literal");
			bool negated = false;
			if (lex.ident() == "not") {
				lex.advance();
				if (lex.tok() != Lexer::Tok::Ident || lex.ident() == "not")
					throw ParseError(lex.line(), lex.column(), "expected atom after 'not'");
				negated = true;
			}
			AtomId a = symbols->intern(lex.ident());
			insertUnique(negated ? c.negBody : c.posBody, a);
			lex.advance();
			if (lex.tok() == Lexer::Tok::Comma) { lex.advance(); continue; }
			if (lex.tok() == Lexer::Tok::Dot) { lex.advance(); return; }
			if (lex.tok() == Lexer::Tok::Ident)
				throw ParseError(lex.line(), lex.column(), "expected ',' or '.' before '" + lex.ident() + "'");
			throw ParseError(lex.line(), lex.column(), "expected ',' or '.'");
		}
	};

	while (lex.tok() != Lexer::Tok::End) {
		Clause c;
		if (lex.tok() == Lexer::Tok::ImpliedBy) {
			lex.advance();
			parseBody(c);
		}
		else if (lex.tok() == Lexer::Tok::Ident) {
			if (lex.ident() == "not")
				throw ParseError(lex.line(), lex.column(), "'not' is reserved and cannot head a clause");
			c.head = symbols->intern(lex.ident());
			lex.advance();
			if (lex.tok() == Lexer::Tok::Dot) { lex.advance(); }
			else if (lex.tok() == Lexer::Tok::ImpliedBy) {
				lex.advance();
				parseBody(c);
			}
			else if (lex.tok() == Lexer::Tok::Ident)
				throw ParseError(lex.line(), lex.column(), "clause has a second head atom '" + lex.ident() + "'");
			else
				throw ParseError(lex.line(), lex.column(), "expected ':-' or '.' after clause head");
		}
		else
			throw ParseError(lex.line(), lex.column(), "expected clause");
		clauses.push_back(std::move(c));
	}
	return Program(std::move(symbols), std::move(clauses));
}

Program parseProgram(std::string_view text) {
	std::istringstream in{std::string(text)};
	return parseProgram(in);
}

void writeProgram(const Program& p, std::ostream& out) {
	const AtomTable& sym = p.symbols();
	for (const Clause& c : p.clauses()) {
		bool first = true;
		if (!c.isConstraint()) {
			out << sym.name(c.head);
			if (c.width() > 1) out << " :- ";
		}
		else
			out << ":- ";
		for (AtomId a : c.posBody) {
			if (!first) out << ", ";
			out << sym.name(a);
			first = false;
		}
		for (AtomId a : c.negBody) {
			if (!first) out << ", ";
			out << "not " << sym.name(a);
			first = false;
		}
		out << ".\n";
	}
}

std::string writeProgram(const Program& p) {
	std::ostringstream out;
	writeProgram(p, out);
	return out.str();
}

} // namespace stenum
