#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stenum {

using AtomId = int;

enum class Polarity { Positive, Negative };

struct Literal {
	AtomId atom;
	Polarity pol;

	Literal dual() const { return {atom, pol == Polarity::Positive ? Polarity::Negative : Polarity::Positive}; }
	bool positive() const { return pol == Polarity::Positive; }

	friend bool operator==(const Literal& a, const Literal& b) { return a.atom == b.atom && a.pol == b.pol; }
	friend bool operator<(const Literal& a, const Literal& b) {
		if (a.atom != b.atom) return a.atom < b.atom;
		return a.pol == Polarity::Positive && b.pol == Polarity::Negative;
	}
};

inline Literal pos(AtomId a) { return {a, Polarity::Positive}; }
inline Literal neg(AtomId a) { return {a, Polarity::Negative}; }

/// A definite clause `head :- posBody, not negBody` or, with no head, a constraint.
/// Bodies are kept as sorted duplicate-free atom-id vectors.
struct Clause {
	static constexpr AtomId noHead = -1;

	AtomId head = noHead;
	std::vector<AtomId> posBody;
	std::vector<AtomId> negBody;

	bool isConstraint() const { return head == noHead; }
	bool isFact() const { return head != noHead && posBody.empty() && negBody.empty(); }
	/// Number of literals counting the head.
	int width() const { return (head != noHead ? 1 : 0) + int(posBody.size() + negBody.size()); }
	bool inPosBody(AtomId a) const;
	bool inNegBody(AtomId a) const;
	bool isTautology() const;
	bool isVirtualConstraint() const;

	friend bool operator==(const Clause&, const Clause&) = default;
};

/// Bijective name<->id map; ids are dense and follow insertion order.
class AtomTable {
public:
	AtomId intern(std::string_view name);
	std::optional<AtomId> find(std::string_view name) const;
	const std::string& name(AtomId id) const { return names_.at(size_t(id)); }
	int size() const { return int(names_.size()); }

private:
	std::vector<std::string> names_;
	std::unordered_map<std::string, AtomId> ids_;
};

/// Immutable indexed clause collection. Derived programs (simplifications,
/// reducts, subprograms) share the atom table of the program they came from,
/// so atom ids stay stable across the whole search.
class Program {
public:
	struct Occurrences {
		std::vector<int> asHead;
		std::vector<int> inPos;
		std::vector<int> inNeg;
		bool empty() const { return asHead.empty() && inPos.empty() && inNeg.empty(); }
	};

	Program();
	Program(std::shared_ptr<const AtomTable> symbols, std::vector<Clause> clauses);

	const AtomTable& symbols() const { return *symbols_; }
	const std::shared_ptr<const AtomTable>& symbolsPtr() const { return symbols_; }

	std::span<const Clause> clauses() const { return clauses_; }
	const Clause& clause(int id) const { return clauses_[size_t(id)]; }
	int numClauses() const { return int(clauses_.size()); }
	bool empty() const { return clauses_.empty(); }

	/// Total number of literal occurrences including heads.
	int size() const { return size_; }
	int numTableAtoms() const { return symbols_->size(); }
	/// Number of atoms occurring in at least one clause.
	int numOccurringAtoms() const { return occurringAtoms_; }
	bool occurs(AtomId a) const { return !occ_[size_t(a)].empty(); }
	const Occurrences& occurrences(AtomId a) const { return occ_[size_t(a)]; }

private:
	std::shared_ptr<const AtomTable> symbols_;
	std::vector<Clause> clauses_;
	std::vector<Occurrences> occ_;
	int size_ = 0;
	int occurringAtoms_ = 0;
};

struct ProgramClass {
	int width = 0;            // max literals per clause, head counts as one
	bool purelyNegative = true;
	bool hasDualPair = false; // some pair a :- not b. / b :- not a.
	bool definite = true;     // no constraints
};

ProgramClass classify(const Program& p);

struct ParseError : std::runtime_error {
	ParseError(int line, int column, const std::string& what);
	int line;
	int column;
};

/// Parses the canonical text format. Atoms are interned in first-occurrence
/// order; duplicate literals inside one body collapse silently.
Program parseProgram(std::istream& in);
Program parseProgram(std::string_view text);

void writeProgram(const Program& p, std::ostream& out);
std::string writeProgram(const Program& p);

} // namespace stenum
