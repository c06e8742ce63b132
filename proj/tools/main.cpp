#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "stenum/bounds.hpp"
#include "stenum/generators.hpp"
#include "stenum/preprocess.hpp"
#include "stenum/search.hpp"
#include "stenum/suffix_scan.hpp"

using namespace stenum;

namespace {

constexpr int exitModels = 10;
constexpr int exitNoModels = 20;
constexpr int exitError = 1;

std::string readInput(const std::string& path) {
	std::ostringstream buf;
	if (path == "-") {
		buf << std::cin.rdbuf();
	}
	else {
		std::ifstream in(path, std::ios::binary);
		if (!in) throw std::runtime_error("cannot open '" + path + "'");
		buf << in.rdbuf();
	}
	return buf.str();
}

std::string fnv1a64(const std::string& text) {
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char ch : text) {
		h ^= ch;
		h *= 1099511628211ull;
	}
	char out[17];
	std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
	return out;
}

double predictedBound(StrategyName resolved, int width, int n) {
	switch (resolved) {
		case StrategyName::TwoProg: return std::pow(3.0, n / 3.0);
		case StrategyName::TSplit: return std::pow(splitGrowthRate(std::max(2, width)), n);
		case StrategyName::Naive: return std::pow(2.0, n);
		case StrategyName::SuffixScan: return double(binomial(n, n / 2));
		default: return 0.0;
	}
}

struct RunOutcome {
	EnumerationResult result;
	StrategyName resolved = StrategyName::Auto;
	double millis = 0.0;
};

RunOutcome runEngine(const Program& p, StrategyName requested, std::optional<std::uint64_t> maxModels,
                     int jobs, int maxScanAtoms) {
	RunOutcome out;
	auto start = std::chrono::steady_clock::now();
	if (requested == StrategyName::SuffixScan) {
		GeneralEnumerationOptions opts;
		opts.jobs = jobs;
		opts.maxAtoms = maxScanAtoms;
		out.result = enumerateGeneral(p, opts);
		out.resolved = StrategyName::SuffixScan;
		if (maxModels && out.result.models.size() > *maxModels)
			out.result.models.resize(size_t(*maxModels));
	}
	else {
		out.resolved = selectStrategy(strip(p).program, requested);
		out.result = enumerate(p, out.resolved, maxModels);
	}
	out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return out;
}

nlohmann::json makeReport(const std::string& digest, const Program& p, const RunOutcome& run) {
	int n = p.numOccurringAtoms();
	double bound = predictedBound(run.resolved, classify(p).width, n);
	const SearchStats& s = run.result.stats;
	return nlohmann::json{
	    {"inputDigest", digest},
	    {"n", n},
	    {"m", p.size()},
	    {"strategy", std::string(strategyName(run.resolved))},
	    {"models", s.modelsFound},
	    {"calls", s.calls},
	    {"leaves", s.leaves},
	    {"maxDepth", s.maxDepth},
	    {"perDepthCalls", s.perDepthCalls},
	    {"millis", run.millis},
	    {"bound", bound},
	    {"callsOverBound", bound > 0.0 ? double(s.calls) / bound : 0.0},
	};
}

struct BenchInstance {
	std::string name;
	Program program;
};

void benchRow(std::ostream& out, const BenchInstance& inst, StrategyName requested, int maxScanAtoms) {
	RunOutcome run = runEngine(inst.program, requested, std::nullopt, 1, maxScanAtoms);
	int n = inst.program.numOccurringAtoms();
	double bound = predictedBound(run.resolved, classify(inst.program).width, n);
	out << inst.name << ',' << n << ',' << inst.program.size() << ',' << strategyName(run.resolved)
	    << ',' << run.result.stats.calls << ',' << run.result.stats.modelsFound << ',' << run.millis
	    << ',' << bound << '\n';
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"stable model enumeration for ground logic programs"};
	app.require_subcommand(1);

	// solve / count
	std::string inputPath = "-";
	std::string strategyArg = "auto";
	std::uint64_t maxModels = 0;
	bool withStats = false, countOnly = false;
	int jobs = 1, maxScanAtoms = 28;
	bool forceScan = false;

	auto addEngineFlags = [&](CLI::App* cmd, bool solveExtras) {
		cmd->add_option("file", inputPath, "program file, '-' for stdin")->required();
		cmd->add_option("--strategy", strategyArg, "auto|naive|tsplit|2prog|suffix-scan")
		    ->default_val("auto");
		cmd->add_flag("--stats", withStats, "emit a one-line JSON report on stderr");
		cmd->add_option("--jobs", jobs, "worker threads for suffix-scan partitions")->default_val(1);
		cmd->add_flag("--force", forceScan, "lift the suffix-scan atom-count guard");
		if (solveExtras) {
			cmd->add_option("--max-models", maxModels, "stop after this many models");
			cmd->add_flag("--count-only", countOnly, "print only the model count");
		}
	};
	CLI::App* solve = app.add_subcommand("solve", "enumerate stable models");
	addEngineFlags(solve, true);
	CLI::App* count = app.add_subcommand("count", "count stable models");
	addEngineFlags(count, false);

	// check
	std::string checkProgram, checkModel;
	CLI::App* check = app.add_subcommand("check", "test one atom set for stability");
	check->add_option("file", checkProgram, "program file")->required();
	check->add_option("model", checkModel, "file listing atom names")->required();

	// gen
	CLI::App* gen = app.add_subcommand("gen", "emit a generated program");
	int genN = 3, genT = 1, genK = 2, genClauses = 0;
	std::uint64_t genSeed = 0;
	std::string kcopyFamily = "s6";
	CLI::App* genPntCmd = gen->add_subcommand("pnt", "all clauses x :- not b1..bt over n atoms");
	genPntCmd->add_option("--n", genN)->required();
	genPntCmd->add_option("--t", genT)->required();
	CLI::App* genS6Cmd = gen->add_subcommand("s6", "the six-atom two-step ring");
	CLI::App* genKCmd = gen->add_subcommand("kcopies", "disjoint renamed copies of a base family");
	genKCmd->add_option("--family", kcopyFamily, "s6|pnt")->default_val("s6");
	genKCmd->add_option("--k", genK)->required();
	genKCmd->add_option("--n", genN);
	genKCmd->add_option("--t", genT);
	CLI::App* genRandCmd = gen->add_subcommand("random", "seeded random definite program");
	genRandCmd->add_option("--n", genN)->required();
	genRandCmd->add_option("--t", genT, "max clause width")->required();
	genRandCmd->add_option("--clauses", genClauses)->required();
	genRandCmd->add_option("--seed", genSeed)->default_val(0);
	gen->require_subcommand(1);

	// bench
	CLI::App* bench = app.add_subcommand("bench", "CSV timing/branching table");
	std::string benchFamily = "pnt", strategiesArg = "auto";
	int benchT = 1, nFrom = 3, nTo = 9, kFrom = 1, kTo = 3, perN = 3;
	std::uint64_t benchSeed = 1;
	bench->add_option("--family", benchFamily, "pnt|kpnt|s6-copies|random")->default_val("pnt");
	bench->add_option("--strategies", strategiesArg, "comma-separated strategy list");
	bench->add_option("--t", benchT, "family parameter t (pnt subscript / width)");
	bench->add_option("--n-from", nFrom);
	bench->add_option("--n-to", nTo);
	bench->add_option("--k-from", kFrom);
	bench->add_option("--k-to", kTo);
	bench->add_option("--per-n", perN, "random instances per size");
	bench->add_option("--seed", benchSeed);
	bench->add_option("--jobs", jobs, "parallel bench instances")->default_val(1);

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e) {
		if (e.get_exit_code() == 0) return app.exit(e); // --help
		app.exit(e);
		return exitError;
	}

	try {
		if (*solve || *count) {
			if (*count) countOnly = true;
			std::string text = readInput(inputPath);
			Program p = parseProgram(text);
			StrategyName requested = parseStrategyName(strategyArg);
			if (forceScan) maxScanAtoms = p.numTableAtoms();
			std::optional<std::uint64_t> cap;
			if (solve->count("--max-models")) cap = maxModels;
			RunOutcome run = runEngine(p, requested, cap, jobs, maxScanAtoms);
			if (countOnly)
				std::cout << run.result.models.size() << '\n';
			else
				for (const Model& m : run.result.models)
					std::cout << formatModel(m, p.symbols()) << '\n';
			if (withStats) std::cerr << makeReport(fnv1a64(text), p, run).dump() << '\n';
			return run.result.models.empty() ? exitNoModels : exitModels;
		}

		if (*check) {
			Program p = parseProgram(readInput(checkProgram));
			std::istringstream in(readInput(checkModel));
			Model m;
			std::string name;
			while (in >> name) {
				auto id = p.symbols().find(name);
				if (!id) throw std::runtime_error("unknown atom '" + name + "' in model file");
				m.atoms.push_back(*id);
			}
			m = Model(std::move(m.atoms));
			StripResult stripped = strip(p);
			bool ok = isStable(stripped.program, m) && satisfiesConstraints(stripped.constraints, m);
			std::cout << (ok ? "stable" : "unstable") << '\n';
			return ok ? 0 : exitNoModels;
		}

		if (*gen) {
			Program p;
			if (*genPntCmd)
				p = genPnt(genN, genT);
			else if (*genS6Cmd)
				p = genS6();
			else if (*genKCmd) {
				Program base = kcopyFamily == "s6"    ? genS6()
				               : kcopyFamily == "pnt" ? genPnt(genN, genT)
				                                      : throw std::runtime_error("unknown base family");
				p = genKCopies(base, genK);
			}
			else
				p = genRandom(genN, genT, genClauses, genSeed);
			writeProgram(p, std::cout);
			return 0;
		}

		if (*bench) {
			std::vector<StrategyName> strategies;
			std::stringstream ss(strategiesArg);
			std::string tok;
			while (std::getline(ss, tok, ',')) strategies.push_back(parseStrategyName(tok));
			if (strategies.empty()) throw std::runtime_error("no strategies given");

			std::vector<BenchInstance> instances;
			if (benchFamily == "pnt") {
				for (int n = nFrom; n <= nTo; ++n)
					if (benchT >= 1 && benchT < n)
						instances.push_back({"pnt-n" + std::to_string(n) + "-t" + std::to_string(benchT),
						                     genPnt(n, benchT)});
			}
			else if (benchFamily == "kpnt") {
				for (int k = kFrom; k <= kTo; ++k)
					instances.push_back({"kpnt-t" + std::to_string(benchT) + "-k" + std::to_string(k),
					                     genKCopies(genPnt(2 * benchT - 1, benchT - 1), k)});
			}
			else if (benchFamily == "s6-copies") {
				for (int k = kFrom; k <= kTo; ++k)
					instances.push_back({"s6-k" + std::to_string(k), genKCopies(genS6(), k)});
			}
			else if (benchFamily == "random") {
				for (int n = nFrom; n <= nTo; ++n)
					for (int i = 0; i < perN; ++i)
						instances.push_back(
						    {"rand-n" + std::to_string(n) + "-t" + std::to_string(benchT) + "-i" +
						         std::to_string(i),
						     genRandom(n, std::max(2, benchT), 3 * n,
						               benchSeed + std::uint64_t(i) + 997u * std::uint64_t(n))});
			}
			else
				throw std::runtime_error("unknown bench family '" + benchFamily + "'");

			std::cout << "instance,n,m,strategy,calls,models,millis,bound\n";
			std::vector<std::pair<const BenchInstance*, StrategyName>> tasks;
			for (const BenchInstance& inst : instances)
				for (StrategyName s : strategies) tasks.emplace_back(&inst, s);
			if (jobs <= 1) {
				for (auto& [inst, s] : tasks) benchRow(std::cout, *inst, s, maxScanAtoms);
			}
			else {
				std::vector<std::future<std::string>> rows;
				for (auto& [inst, s] : tasks)
					rows.push_back(std::async(std::launch::async, [inst = inst, s, maxScanAtoms] {
						std::ostringstream row;
						benchRow(row, *inst, s, maxScanAtoms);
						return row.str();
					}));
				for (auto& row : rows) std::cout << row.get();
			}
			return 0;
		}
	}
	catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exitError;
	}
	return exitError;
}
