#include <cctype>
#include <map>

#include "offhex/errors.hpp"
#include "offhex/formulas.hpp"

namespace offhex {

namespace {

using F = Family;
using S = SpecialFn;

// Rows for the lower-left families carry the split H(.) pattern
//   H(M-oa+ob+oc+y+..) H(M+oa-ob+ec+y+..) over the same terms with +z;
// barred rows replace it by the plain odd and even sums.
const std::vector<TheoremRow> kRows = {
    {F::E, 1, S::Phi, {"x", "2y+z+2M", "z"},
     "y+b-mn; A; h-1; C+h+1+B~", "A+h-1+C; h+1; B~; y+a-mn",
     {"c+h-1", "M+y+h-1", "M+y+z", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y"},
     {"c", "h-1", "M+c+y+h-1", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z", "M+y", "M+y"}, ""},
    {F::E, 2, S::Phi, {"2y+z+2M+2", "x", "z"},
     "y+b-mn; A; h; C+h+B~", "A+h+C; h; B~; y+a-mn+2",
     {"c+h", "M+y+h", "M+y+z+2", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y+2"},
     {"c", "h", "M+c+y+h", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z+2", "M+y", "M+y+2"}, ""},
    {F::E, 6, S::Phi, {"z", "2y+z+2M+2", "x"},
     "y+b-mn+2; A; h-1; C+h+1+B~", "A+h-1+C; h+1; B~; y+a-mn",
     {"c+h-1", "M+y+h+1", "M+y+z", "M+c+y+z+2", "M-oa+ob+oc+y+2", "M+oa-ob+ec+y"},
     {"c", "h-1", "M+c+y+h+1", "M-oa+ob+oc+y+z+2", "M+oa-ob+ec+y+z", "M+y", "M+y+2"}, ""},
    {F::F, 1, S::Theta, {"x", "2y+z+2M+2", "z"},
     "y+b-mn+2; A; fl; C+cl+B~", "A+fl+C; cl; B~; y+a-mn",
     {"c+fl", "M+y+cl+1", "M+y+z", "M+c+y+z+2", "M-oa+ob+oc+y+2", "M+oa-ob+ec+y"},
     {"c", "fl", "M+c+y+cl+1", "M-oa+ob+oc+y+z+2", "M+oa-ob+ec+y+z", "M+y", "M+y+2"}, "passes once the Theta denominator uses H((y+z)/2-1)"},
    {F::F, 2, S::Lambda, {"x", "2y+z+2M+2", "z"},
     "y+b-mn+2; A; fl-1; C+cl+1+B~", "A+fl-1+C; cl+1; B~; y+a-mn",
     {"c+fl-1", "M+y+fl+1", "M+y+z", "M+c+y+z+2", "M-oa+ob+oc+y+2", "M+oa-ob+ec+y"},
     {"c", "fl-1", "M+c+y+fl+1", "M-oa+ob+oc+y+z+2", "M+oa-ob+ec+y+z", "M+y", "M+y+2"}, ""},
    {F::F, 3, S::Psi, {"x", "2y+z+2M", "z"},
     "y+b-mn; A; fl-1; C+cl+1+B~", "A+fl-1+C; cl+1; B~; y+a-mn",
     {"c+fl-1", "M+y+fl-1", "M+y+z", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y"},
     {"c", "fl-1", "M+c+y+fl-1", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z", "M+y", "M+y"}, ""},
    {F::F, 4, S::LambdaPrime, {"x", "z", "2y+z+2M+2"},
     "y+b-mn; A; fl; C+cl+B~", "A+fl+C; cl; B~; y+a-mn+2",
     {"c+fl", "M+y+fl", "M+y+z+2", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y+2"},
     {"c", "fl", "M+c+y+fl", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z+2", "M+y", "M+y+2"}, ""},
    {F::G, 1, S::ThetaPrime, {"2y+z+2M+1", "z", "x"},
     "y+b-mn+1; A; h-1; C+h+1+B~", "A+h-1+C; h+1; B~; y+a-mn",
     {"c+h-1", "M+y+h", "M+y+z", "M+c+y+z+1", "M-oa+ob+oc+y+1", "M+oa-ob+ec+y"},
     {"c", "h-1", "M+c+y+h", "M-oa+ob+oc+y+z+1", "M+oa-ob+ec+y+z", "M+y+1", "M+y"}, ""},
    {F::G, 2, S::LambdaPrime, {"2y+z+2M+1", "z", "x"},
     "y+b-mn; A; h-1; C+h+1+B~", "A+h-1+C; h+1; B~; y+a-mn+1",
     {"c+h-1", "M+y+h-1", "M+y+z+1", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y+1"},
     {"c", "h-1", "M+c+y+h-1", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z+1", "M+y+1", "M+y"}, ""},
    {F::G, 3, S::PsiPrime, {"2y+z+2M+3", "z", "x"},
     "y+b-mn; A; h; C+h+B~", "A+h+C; h; B~; y+a-mn+3",
     {"c+h", "M+y+h", "M+y+z+3", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y+3"},
     {"c", "h", "M+c+y+h", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z+3", "M+y+3", "M+y"}, ""},
    {F::G, 4, S::Lambda, {"2y+z+2M+3", "x", "z"},
     "y+b-mn; A; h+1; C+h-1+B~", "A+h+1+C; h-1; B~; y+a-mn+3",
     {"c+h+1", "M+y+h+1", "M+y+z+3", "M+c+y+z", "M-oa+ob+oc+y", "M+oa-ob+ec+y+3"},
     {"c", "h+1", "M+c+y+h+1", "M-oa+ob+oc+y+z", "M+oa-ob+ec+y+z+3", "M+y+3", "M+y"}, "prefactor arguments reordered to (2y+z+2M+3, x, z)"},
    {F::K, 1, S::ThetaPrime, {"z", "x", "2y+z+2M+1"},
     "y+b-mn+1; A; cl; C+fl+B~", "A+cl+C; fl; B~; y+a-mn",
     {"c+cl", "M+y+cl+1", "M+y+z", "M+c+y+z+1", "M-oa+ob+oc+y+1", "M+oa-ob+ec+y"},
     {"c", "cl", "M+c+y+cl+1", "M-oa+ob+oc+y+z+1", "M+oa-ob+ec+y+z", "M+y+1", "M+y"}, ""},
    {F::K, 2, S::LambdaPrime, {"z", "x", "2y+z+2M+3"},
     "y+b-mn+3; A; fl; C+cl+B~", "A+fl+C; cl; B~; y+a-mn",
     {"c+fl", "M+y+cl+2", "M+y+z", "M+c+y+z+3", "M-oa+ob+oc+y+3", "M+oa-ob+ec+y"},
     {"c", "fl", "M+c+y+cl+2", "M-oa+ob+oc+y+z+3", "M+oa-ob+ec+y+z", "M+y+3", "M+y"}, ""},
    {F::K, 3, S::PsiPrime, {"z", "x", "2y+z+2M+3"},
     "y+b-mn+3; A; fl-1; C+cl+1+B~", "A+fl-1+C; cl+1; B~; y+a-mn",
     {"c+fl-1", "M+y+cl+1", "M+y+z", "M+c+y+z+3", "M-oa+ob+oc+y+3", "M+oa-ob+ec+y"},
     {"c", "fl-1", "M+c+y+cl+1", "M-oa+ob+oc+y+z+3", "M+oa-ob+ec+y+z", "M+y+3", "M+y"}, ""},
    {F::K, 4, S::Lambda, {"z", "2y+z+2M+1", "x"},
     "y+b-mn+1; A; fl-1; C+cl+1+B~", "A+fl-1+C; cl+1; B~; y+a-mn",
     {"c+fl-1", "M+y+fl", "M+y+z", "M+c+y+z+1", "M-oa+ob+oc+y+1", "M+oa-ob+ec+y"},
     {"c", "fl-1", "M+c+y+fl", "M-oa+ob+oc+y+z+1", "M+oa-ob+ec+y+z", "M+y+1", "M+y"}, "prefactor arguments reordered to (z, 2y+z+2M+1, x)"},

    {F::EBar, 1, S::Phi, {"x", "2y+z+2M", "z"},
     "A+h-1; C+h+1+B~", "y+b-mn; A; h-1+C; h+1; B~; y+a-mn",
     {"c+h-1", "M+y+h-1", "M+y+z", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y"},
     {"c", "h-1", "M+c+y+h-1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z", "M+y", "M+y"}, ""},
    {F::EBar, 2, S::Phi, {"2y+z+2M+2", "x", "z"},
     "A+h; C+h+B~", "y+b-mn; A; h+C; h; B~; y+a-mn+2",
     {"c+h", "M+y+h", "M+y+z+2", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y+2"},
     {"c", "h", "M+c+y+h", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+2", "M+y", "M+y+2"}, ""},
    {F::EBar, 3, S::Phi, {"z", "2y+z+2M+2", "x"},
     "A+h+1; C+h-1+B~", "y+b-mn; A; h+1+C; h-1; B~; y+a-mn+2",
     {"c+h-1", "M+y+h+1", "M+y+z", "M+c+y+z+2", "oa+ob+oc", "ad+ea+eb+ec+2y+2"},
     {"c", "h-1", "M+c+y+h+1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+2", "M+y", "M+y+2"}, "prefactor arguments reordered to (z, 2y+z+2M+2, x)"},
    {F::FBar, 3, S::Psi, {"x", "2y+z+2M", "z"},
     "A+fl-1; C+cl+1+B~", "y+b-mn; A; fl-1+C; cl+1; B~; y+a-mn",
     {"c+fl-1", "M+y+fl-1", "M+y+z", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y"},
     {"c", "fl-1", "M+c+y+fl-1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z", "M+y", "M+y"}, "prefactor arguments reordered to (x, 2y+z+2M, z)"},
    {F::FBar, 4, S::LambdaPrime, {"x", "z", "2y+z+2M+2"},
     "A+fl; C+cl+B~", "y+b-mn; A; fl+C; cl; B~; y+a-mn+2",
     {"c+fl", "M+y+fl", "M+y+z+2", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y+2"},
     {"c", "fl", "M+c+y+fl", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+2", "M+y", "M+y+2"}, ""},
    {F::FBar, 5, S::Theta, {"x", "2y+z+2M+2", "z"},
     "A+cl; C+fl+B~", "y+b-mn; A; cl+C; fl; B~; y+a-mn+2",
     {"c+fl", "M+y+cl+1", "M+y+z", "M+c+y+z+2", "oa+ob+oc", "ad+ea+eb+ec+2y+2"},
     {"c", "fl", "M+c+y+cl+1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+2", "M+y", "M+y+2"}, "prefactor Theta instead of Theta'; floor/ceil split of (x+z)/2"},
    {F::FBar, 6, S::Lambda, {"x", "2y+z+2M+2", "z"},
     "A+cl+1; C+fl-1+B~", "y+b-mn; A; cl+1+C; fl-1; B~; y+a-mn+2",
     {"c+fl-1", "M+y+fl+1", "M+y+z", "M+c+y+z+2", "oa+ob+oc", "ad+ea+eb+ec+2y+2"},
     {"c", "fl-1", "M+c+y+fl+1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+2", "M+y", "M+y+2"}, "prefactor Lambda instead of Lambda'; floor-based correction terms"},
    {F::GBar, 2, S::LambdaPrime, {"2y+z+2M+1", "z", "x"},
     "A+h-1; C+h+1+B~", "y+b-mn; A; h-1+C; h+1; B~; y+a-mn+1",
     {"c+h-1", "M+y+h-1", "M+y+z+1", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y+1"},
     {"c", "h-1", "M+c+y+h-1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+1", "M+y", "M+y+1"}, "last numerator term gains +1"},
    {F::GBar, 3, S::PsiPrime, {"2y+z+2M+3", "z", "x"},
     "A+h; C+h+B~", "y+b-mn; A; h+C; h; B~; y+a-mn+3",
     {"c+h", "M+y+h", "M+y+z+3", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y+3"},
     {"c", "h", "M+c+y+h", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+3", "M+y", "M+y+3"}, ""},
    {F::GBar, 4, S::Lambda, {"2y+z+2M+3", "x", "z"},
     "A+h+1; C+h-1+B~", "y+b-mn; A; h+1+C; h-1; B~; y+a-mn+3",
     {"c+h+1", "M+y+h+1", "M+y+z+3", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y+3"},
     {"c", "h+1", "M+c+y+h+1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+3", "M+y", "M+y+3"}, "prefactor arguments reordered to (2y+z+2M+3, x, z)"},
    {F::GBar, 5, S::ThetaPrime, {"2y+z+2M+1", "z", "x"},
     "A+h+1; C+h-1+B~", "y+b-mn; A; h+1+C; h-1; B~; y+a-mn+1",
     {"c+h-1", "M+y+h", "M+y+z", "M+c+y+z+1", "oa+ob+oc", "ad+ea+eb+ec+2y+1"},
     {"c", "h-1", "M+c+y+h", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+1", "M+y", "M+y+1"}, "prefactor Theta' instead of Theta"},
    {F::KBar, 5, S::ThetaPrime, {"z", "x", "2y+z+2M+1"},
     "A+fl; C+cl+B~", "y+b-mn; A; fl+C; cl; B~; y+a-mn+1",
     {"c+cl", "M+y+cl+1", "M+y+z", "M+c+y+z+1", "oa+ob+oc", "ad+ea+eb+ec+2y+1"},
     {"c", "cl", "M+c+y+cl+1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+1", "M+y", "M+y+1"}, "prefactor Theta' instead of Theta"},
    {F::KBar, 6, S::Lambda, {"z", "x", "2y+z+2M+3"},
     "A+cl; C+fl+B~", "y+b-mn; A; cl+C; fl; B~; y+a-mn+3",
     {"c+cl", "M+y+cl", "M+y+z+3", "M+c+y+z", "oa+ob+oc", "ad+ea+eb+ec+2y+3"},
     {"c", "cl", "M+c+y+cl", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+3", "M+y", "M+y+3"}, "correction terms use ceil((x+z)/2) and the +3 shift moves to M+y+z"},
    {F::KBar, 7, S::PsiPrime, {"z", "x", "2y+z+2M+3"},
     "A+cl+1; C+fl-1+B~", "y+b-mn; A; cl+1+C; fl-1; B~; y+a-mn+3",
     {"c+fl-1", "M+y+cl+1", "M+y+z", "M+c+y+z+3", "oa+ob+oc", "ad+ea+eb+ec+2y+3"},
     {"c", "fl-1", "M+c+y+cl+1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+3", "M+y", "M+y+3"}, "prefactor Psi' instead of Psi"},
    {F::KBar, 8, S::Lambda, {"z", "2y+z+2M+1", "x"},
     "A+cl+1; C+fl-1+B~", "y+b-mn; A; cl+1+C; fl-1; B~; y+a-mn+1",
     {"c+fl-1", "M+y+cl-1", "M+y+z", "M+c+y+z+1", "oa+ob+oc", "ad+ea+eb+ec+2y+1"},
     {"c", "fl-1", "M+c+y+cl-1", "oa+ob+oc+z", "ad+ea+eb+ec+2y+z+1", "M+y", "M+y+1"}, "prefactor Lambda(z, 2y+z+2M+1, x) instead of Lambda'(2y+z+2M+1, x, z); M+y+ceil-1 terms"},
};

struct Vars {
    std::map<std::string, HalfInt> v;
    std::vector<int> A, C, Brev;
};

Vars make_vars(const RegionSpec& s)
{
    Vars V;
    long a = s.a.total(), b = s.b.total(), c = s.c.total();
    auto I = [](long n) { return HalfInt::of(n); };
    HalfInt h = HalfInt::half(s.x + s.z);
    V.v = {{"x", I(s.x)}, {"y", I(s.y)}, {"z", I(s.z)}, {"a", I(a)}, {"b", I(b)}, {"c", I(c)},
           {"oa", I(s.a.odd_sum())}, {"ea", I(s.a.even_sum())}, {"ob", I(s.b.odd_sum())},
           {"eb", I(s.b.even_sum())}, {"oc", I(s.c.odd_sum())}, {"ec", I(s.c.even_sum())},
           {"M", I(std::max(a, b))}, {"mn", I(std::min(a, b))}, {"ad", I(a > b ? a - b : b - a)},
           {"h", h}, {"fl", I(h.floor())}, {"cl", I(h.ceil())}};
    V.A = s.a.padded();
    V.C = s.c.padded();
    V.Brev = s.b.padded();
    std::reverse(V.Brev.begin(), V.Brev.end());
    return V;
}

// A term is either a fern reference or a linear piece.
struct Piece {
    const std::vector<int>* fern = nullptr;
    HalfInt lin;
};

std::vector<Piece> parse_item(const std::string& item, const Vars& V)
{
    std::vector<Piece> out;
    std::size_t i = 0;
    auto skip = [&] { while (i < item.size() && std::isspace(static_cast<unsigned char>(item[i]))) i++; };
    bool first = true;
    while (true) {
        skip();
        if (i >= item.size()) break;
        int sign = 1;
        if (item[i] == '+' || item[i] == '-') {
            sign = item[i] == '-' ? -1 : 1;
            i++;
            skip();
        } else if (!first) {
            throw Error(ErrorKind::Parse, "bad expression '" + item + "'");
        }
        first = false;
        long coef = 1;
        bool has_num = false;
        if (i < item.size() && std::isdigit(static_cast<unsigned char>(item[i]))) {
            coef = 0;
            has_num = true;
            while (i < item.size() && std::isdigit(static_cast<unsigned char>(item[i]))) coef = coef * 10 + (item[i++] - '0');
        }
        std::string name;
        while (i < item.size() && (std::isalpha(static_cast<unsigned char>(item[i])) || item[i] == '~')) name += item[i++];
        if (name == "A" || name == "C" || name == "B~") {
            if (sign < 0 || has_num) throw Error(ErrorKind::Parse, "fern references cannot be scaled");
            Piece p;
            p.fern = name == "A" ? &V.A : name == "C" ? &V.C : &V.Brev;
            out.push_back(p);
            continue;
        }
        HalfInt val = HalfInt::of(1);
        if (!name.empty()) {
            auto it = V.v.find(name);
            if (it == V.v.end()) throw Error(ErrorKind::Parse, "unknown symbol '" + name + "'");
            val = it->second;
        } else if (!has_num) {
            throw Error(ErrorKind::Parse, "bad expression '" + item + "'");
        }
        HalfInt term{sign * coef * val.twice};
        if (!out.empty() && !out.back().fern) out.back().lin = out.back().lin + term;
        else out.push_back({nullptr, term});
    }
    return out;
}

std::vector<long> splice(const std::vector<Piece>& ps)
{
    std::vector<long> el;
    bool have = false;
    HalfInt pending;
    for (const auto& p : ps) {
        if (!p.fern) {
            if (have) el.back() += p.lin.as_integer();
            else pending = pending + p.lin;
            continue;
        }
        std::vector<long> f(p.fern->begin(), p.fern->end());
        if (have) {
            el.back() += f[0];
            el.insert(el.end(), f.begin() + 1, f.end());
        } else {
            f[0] += pending.as_integer();
            el = f;
            have = true;
        }
    }
    if (!have) el.push_back(pending.as_integer());
    return el;
}

std::vector<std::string> split_items(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

const std::vector<TheoremRow>& theorem_table() { return kRows; }

const TheoremRow& theorem_row(Family f, int position)
{
    for (const auto& r : kRows)
        if (r.family == f && r.position == position) return r;
    throw Error(ErrorKind::NoTheoremRow,
                std::string("no closed form for ") + family_name(f) + ":" + std::to_string(position));
}

HalfInt eval_expr(const std::string& expr, const RegionSpec& s)
{
    Vars V = make_vars(s);
    auto ps = parse_item(expr, V);
    HalfInt r;
    for (const auto& p : ps) {
        if (p.fern) throw Error(ErrorKind::Parse, "fern reference in scalar expression");
        r = r + p.lin;
    }
    return r;
}

std::vector<int> eval_sequence(const std::string& seq, const RegionSpec& s)
{
    Vars V = make_vars(s);
    std::vector<int> out;
    for (const auto& item : split_items(seq)) {
        for (long v : splice(parse_item(item, V))) {
            if (v < 0) throw Error(ErrorKind::NegativeArgument, "negative semihexagon entry in '" + seq + "'");
            out.push_back(static_cast<int>(v));
        }
    }
    return out;
}

TheoremTerms theorem_terms(const RegionSpec& s)
{
    return evaluate_row(theorem_row(s.family, s.position), s);
}

TheoremTerms evaluate_row(const TheoremRow& row, const RegionSpec& s)
{
    region_geometry(s);  // validates parity, y range and fit
    TheoremTerms t;
    long args[3];
    for (int i = 0; i < 3; i++) args[i] = eval_expr(row.args[i], s).as_integer();
    t.prefactor = special_fn(row.fn, args[0], args[1], args[2], s.c.total());
    t.s1 = eval_sequence(row.s1, s);
    t.s2 = eval_sequence(row.s2, s);
    HyperValue v = t.prefactor;
    v *= HyperValue{mpq_class(clp_count(t.s1)), 0};
    v *= HyperValue{mpq_class(clp_count(t.s2)), 0};
    for (const char* e : row.num) v *= hyperfactorial(eval_expr(e, s));
    for (const char* e : row.den) v /= hyperfactorial(eval_expr(e, s));
    t.value = v;
    return t;
}

HyperValue theorem_value(const RegionSpec& s) { return theorem_terms(s).value; }

BigCount theorem_count(const RegionSpec& s) { return theorem_value(s).to_count(); }

}  // namespace offhex
