// Command-line front end: build characters, run verification suites, dump
// enumeration tables, query fusion rules and bijection oracles. All output is
// exact; --json switches to the deterministic JSON encoding.
//
// Exit codes: 0 success (all checks passed), 1 verification failure,
// 2 usage or parameter error.

#include "voachar/fusion.hpp"
#include "voachar/json_io.hpp"
#include "voachar/pbw.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace voachar;

namespace {

Rat parseRat(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(BigInt(tok));
    return Rat(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
}

int parseSub(const std::string& s) {
    if (s == "none") return 0;
    if (s == "plus") return 1;
    if (s == "minus") return -1;
    throw CLI::ValidationError("--sub must be none, plus or minus");
}

void emit(const Json& j, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error("cannot open output file: " + outPath);
        out << j.dump(2) << "\n";
    }
}

void emitText(const std::string& s, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << s << "\n";
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error("cannot open output file: " + outPath);
        out << s << "\n";
    }
}

struct CharOpts {
    std::string family;
    std::string kStr = "0", muStr = "0";
    long long q = 2, p = 1, r = 0, s = 0;
    std::string sub = "none";
    std::string variant = "char";
    long long order = 10;
    long long wdepth = 0;
    bool lowest = false; // lw module instead of hw
    bool json = false;
    std::string outPath;
};

int runChar(const CharOpts& o) {
    Rat cutoff(o.order);
    Rat wd(o.wdepth);
    Rat k = parseRat(o.kStr);
    Rat mu = parseRat(o.muStr);
    int sub = parseSub(o.sub);
    Variant v = o.variant == "superchar" ? Variant::SuperChar : Variant::Char;
    bool hw = !o.lowest;

    auto outFrac = [&](const FracSeries& f) {
        if (o.json)
            emit(seriesToJson(f), o.outPath);
        else
            emitText(f.str(40), o.outPath);
        return 0;
    };
    auto outJac = [&](const JacobiSeries& j) {
        if (sub != 0) return outFrac(j.substitute(Rat(-sub, 2), Rat(3)));
        if (o.json)
            emit(jacobiToJson(j), o.outPath);
        else
            emitText("jacobi series: " + std::to_string(j.grades().size()) +
                         " q-grades up to cutoff " + j.cutoff().str() +
                         " (use --json for full output)",
                     o.outPath);
        return 0;
    };

    const std::string& f = o.family;
    if (f == "aff-verma") return outJac(chAffineVerma(k, mu, hw, cutoff, wd));
    if (f == "weyl") {
        if (sub != 0) return outFrac(chWeylSub(k, o.r, sub, cutoff));
        return outJac(chWeyl(k, o.r, cutoff, wd));
    }
    if (f == "aff-adm") {
        if (sub != 0) return outFrac(chAdmissibleSub(o.q, o.p, o.r, o.s, sub, cutoff));
        return outJac(chAdmissible(o.q, o.p, o.r, o.s, hw, cutoff, wd));
    }
    if (f == "aff-boundary") {
        if (sub != 0) return outFrac(chBoundaryAffineSub(o.p, o.s, sub, cutoff));
        return outJac(chBoundaryAffine(o.p, o.s, hw, cutoff, wd));
    }
    if (f == "vir-verma") return outFrac(chVirVerma(parseRat(o.muStr), cutoff));
    if (f == "vir-minimal") return outFrac(chMinimal(o.q, o.p, o.r, o.s, cutoff));
    if (f == "vir-log") return outFrac(chLog(o.p, o.r, o.s, cutoff));
    if (f == "vir-boundary") return outFrac(chBoundaryVir(o.p, o.s, cutoff));
    if (f == "fermion-half") return outFrac(chFermionHalf(v, cutoff));
    if (f == "fermion-threehalf") return outJac(chFermionThreeHalf(v, cutoff));
    if (f == "vp-sum") {
        int sign = sub == 0 ? 1 : sub;
        return outFrac(chVpSum(o.p, sign, v, directSumRMaxNeeded(o.p, cutoff), cutoff));
    }
    if (f == "a3p-sum") return outFrac(chA3pSum(o.p, directSumRMaxNeeded(o.p, cutoff), v, cutoff));
    if (f == "v2-closed") {
        int sign = sub == 0 ? 1 : sub;
        return outFrac(chV2Closed(v, sign, cutoff));
    }
    if (f == "a6-closed") return outFrac(chA6Closed(v, cutoff));
    throw CLI::ValidationError("unknown family: " + f);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character construction and identity verification"};
    app.require_subcommand(1);

    // ---- char ----
    CharOpts co;
    auto* cmdChar = app.add_subcommand("char", "print a character series");
    cmdChar->add_option("--family", co.family,
                        "aff-verma|weyl|aff-adm|aff-boundary|vir-verma|vir-minimal|vir-log|"
                        "vir-boundary|fermion-half|fermion-threehalf|vp-sum|a3p-sum|"
                        "v2-closed|a6-closed")
        ->required();
    cmdChar->add_option("--k", co.kStr, "level (rational, a/b)");
    cmdChar->add_option("--mu", co.muStr, "h0-weight, or h for vir-verma (rational)");
    cmdChar->add_option("--q", co.q, "first index of the (q,p) family");
    cmdChar->add_option("--p", co.p, "second index of the (q,p) family");
    cmdChar->add_option("--r", co.r, "box index r");
    cmdChar->add_option("--s", co.s, "box index s");
    cmdChar->add_option("--sub", co.sub, "substitution (w,q)->(q^{-sign/2},q^3): none|plus|minus");
    cmdChar->add_option("--variant", co.variant, "char|superchar");
    cmdChar->add_option("--order", co.order, "exclusive q-exponent cutoff");
    cmdChar->add_option("--wdepth", co.wdepth, "w-tail depth for two-variable forms (0 = auto)");
    cmdChar->add_flag("--lowest", co.lowest, "lowest-weight module (default highest-weight)");
    cmdChar->add_flag("--json", co.json, "JSON output");
    cmdChar->add_option("--out", co.outPath, "write output to file");

    // ---- verify ----
    SuiteConfig vc;
    bool vJson = false;
    std::string vOut;
    auto* cmdVerify = app.add_subcommand("verify", "run an identity-verification suite");
    cmdVerify->add_option(
        "--suite", vc.suite,
        "verma|admissible|boundary|near|universal|fermion|vp|schur|fusion|all");
    cmdVerify->add_option("--order", vc.order, "series order (0 = per-suite defaults)");
    cmdVerify->add_option("--grid", vc.gridFile, "whitespace-separated parameter grid file");
    cmdVerify->add_flag("--json", vJson, "JSON output");
    cmdVerify->add_option("--out", vOut, "write output to file");

    // ---- table ----
    std::string tKind;
    long long tGrade = 10, tR = 0, tS = 1, tFMin = -10, tFermions = 1;
    bool tJson = false, tLowest = false;
    std::string tOut;
    auto* cmdTable = app.add_subcommand("table", "print an enumeration dimension table");
    cmdTable->add_option("--kind", tKind, "aff-verma|weyl|vir-verma|vir-log|fermion")->required();
    cmdTable->add_option("--grade", tGrade, "maximum integer grade");
    cmdTable->add_option("--r", tR, "top-weight index r (weyl) or r (vir-log)");
    cmdTable->add_option("--s", tS, "s index (vir-log)");
    cmdTable->add_option("--fmin", tFMin, "lowest h0-eigenvalue offset kept (aff-verma)");
    cmdTable->add_option("--fermions", tFermions, "number of fermion species");
    cmdTable->add_flag("--lowest", tLowest, "lowest-weight module (aff-verma)");
    cmdTable->add_flag("--json", tJson, "JSON output");
    cmdTable->add_option("--out", tOut, "write output to file");

    // ---- fusion ----
    long long fQ = 5, fR1 = -1, fR2 = -1;
    bool fJson = false;
    auto* cmdFusion = app.add_subcommand("fusion", "fusion products and ring checks");
    cmdFusion->add_option("--q", fQ, "level index q (level k = q-2)")->required();
    cmdFusion->add_option("--r1", fR1, "first label");
    cmdFusion->add_option("--r2", fR2, "second label");
    cmdFusion->add_flag("--json", fJson, "JSON output");

    // ---- oracle ----
    std::string oKind;
    long long oP = 1, oR = 0, oGrade = 8, oWindow = 6;
    int oSign = 1;
    std::string oK = "0", oLambda = "0", oChi = "0";
    bool oJson = false;
    auto* cmdOracle = app.add_subcommand("oracle", "basis-map bijection checks");
    cmdOracle->add_option("--kind", oKind, "psi|chi|relaxed")->required();
    cmdOracle->add_option("--p", oP, "family index p (psi)");
    cmdOracle->add_option("--r", oR, "top-weight index r (psi)");
    cmdOracle->add_option("--sign", oSign, "+1 or -1");
    cmdOracle->add_option("--grade", oGrade, "maximum grade (doubled for chi)");
    cmdOracle->add_option("--k", oK, "level (relaxed, rational)");
    cmdOracle->add_option("--lambda", oLambda, "relaxed top h0-weight (rational)");
    cmdOracle->add_option("--chi", oChi, "relaxed Casimir parameter (rational)");
    cmdOracle->add_option("--window", oWindow, "relaxed enumeration window");
    cmdOracle->add_flag("--json", oJson, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmdChar) return runChar(co);

        if (*cmdVerify) {
            auto reports = runSuite(vc);
            bool allPass = true;
            for (const auto& r : reports) allPass = allPass && r.passed;
            if (vJson) {
                emit(reportsToJson(reports), vOut);
            } else {
                std::string text;
                for (const auto& r : reports) {
                    text += (r.passed ? "PASS " : "FAIL ") + r.checkId;
                    if (r.firstMismatch)
                        text += "  (first mismatch at q^" + r.firstMismatch->exponent.str() +
                                ": " + r.firstMismatch->lhs.str() + " vs " +
                                r.firstMismatch->rhs.str() + ")";
                    for (const auto& n : r.notes) text += "\n  note: " + n;
                    text += "\n";
                }
                text += allPass ? "all " + std::to_string(reports.size()) + " checks passed"
                                : "FAILURES present";
                emitText(text, vOut);
            }
            return allPass ? 0 : 1;
        }

        if (*cmdTable) {
            DimTable table;
            if (tKind == "aff-verma")
                table = dimsAffineVerma(tGrade, tFMin, 2 * tGrade + 2, !tLowest);
            else if (tKind == "weyl")
                table = dimsWeyl(tR, tGrade);
            else if (tKind == "vir-verma") {
                for (auto& [g, d] : dimsVirVerma(tGrade)) table[{0, 2 * g}] = d;
            } else if (tKind == "vir-log") {
                for (auto& [g, d] : dimsLog(tR, tS, tGrade)) table[{0, 2 * g}] = d;
            } else if (tKind == "fermion") {
                table = dimsFermion(static_cast<int>(tFermions), 2 * tGrade).total;
            } else {
                throw CLI::ValidationError("unknown table kind: " + tKind);
            }
            if (tJson) {
                emit(dimsToJson(table), tOut);
            } else {
                std::string text;
                for (auto& [key, dim] : table)
                    text += "f=" + std::to_string(key.f) + " 2n=" + std::to_string(key.twiceN) +
                            " dim=" + dim.str() + "\n";
                if (!text.empty()) text.pop_back();
                emitText(text, tOut);
            }
            return 0;
        }

        if (*cmdFusion) {
            if (fR1 >= 0 && fR2 >= 0) {
                auto prodA = fuseAffine(fQ, fR1, fR2);
                auto prodV = fuseVir3(fQ, fR1, fR2);
                if (fJson) {
                    Json j = Json::object();
                    j["schema"] = 1;
                    j["type"] = "fusion_product";
                    j["q"] = fQ;
                    j["r1"] = fR1;
                    j["r2"] = fR2;
                    j["affine"] = prodA;
                    j["virasoro"] = prodV;
                    j["match"] = prodA == prodV;
                    emit(j, "");
                } else {
                    std::string text = "affine:";
                    for (long long r : prodA) text += " " + std::to_string(r);
                    text += "\nvirasoro:";
                    for (long long r : prodV) text += " " + std::to_string(r);
                    emitText(text, "");
                }
                return prodA == prodV ? 0 : 1;
            }
            RingIsoReport rep = ringIsoCheck(fQ);
            if (fJson) {
                Json j = Json::object();
                j["schema"] = 1;
                j["type"] = "ring_iso";
                j["q"] = fQ;
                j["unit_affine"] = rep.unitAffine;
                j["unit_virasoro"] = rep.unitVir;
                j["commutative_affine"] = rep.commutativeAffine;
                j["commutative_virasoro"] = rep.commutativeVir;
                j["associative_affine"] = rep.associativeAffine;
                j["associative_virasoro"] = rep.associativeVir;
                j["structure_match"] = rep.structureMatch;
                j["pass"] = rep.pass();
                emit(j, "");
            } else {
                emitText(rep.pass() ? "ring isomorphism check passed"
                                    : "ring isomorphism check FAILED",
                         "");
            }
            return rep.pass() ? 0 : 1;
        }

        if (*cmdOracle) {
            bool pass = false;
            Json j = Json::object();
            j["schema"] = 1;
            j["type"] = "bijection_report";
            j["kind"] = oKind;
            if (oKind == "psi") {
                BijectionReport rep = checkPsiBijection(oP, oR, oSign, oGrade);
                pass = rep.injective && rep.weightLaw && rep.surjective;
                j["injective"] = rep.injective;
                j["weight_law"] = rep.weightLaw;
                j["surjective"] = rep.surjective;
                j["labels_checked"] = bigToJson(rep.labelsChecked);
            } else if (oKind == "chi") {
                BijectionReport rep = checkChiBijection(oSign, 2 * oGrade);
                pass = rep.injective && rep.weightLaw && rep.surjective;
                j["injective"] = rep.injective;
                j["weight_law"] = rep.weightLaw;
                j["surjective"] = rep.surjective;
                j["labels_checked"] = bigToJson(rep.labelsChecked);
            } else if (oKind == "relaxed") {
                RelaxedReport rep =
                    relaxedBijectionCheck(parseRat(oK), parseRat(oLambda), parseRat(oChi), oGrade,
                                          oWindow);
                pass = rep.injective && rep.surjective && rep.constantOffset;
                j["injective"] = rep.injective;
                j["surjective"] = rep.surjective;
                j["constant_offset"] = rep.constantOffset;
                j["offset"] = ratToJson(rep.offset);
                j["labels_checked"] = bigToJson(rep.labelsChecked);
            } else {
                throw CLI::ValidationError("unknown oracle kind: " + oKind);
            }
            j["pass"] = pass;
            if (oJson)
                emit(j, "");
            else
                emitText(std::string(oKind) + (pass ? " check passed" : " check FAILED"), "");
            return pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
