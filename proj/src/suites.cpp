// Proof scripts for the theorem suites. These follow the published Walnut
// sessions; see the README for the three places where names had to change.
#include <map>
#include <stdexcept>

#include "zeckit/pipeline.hpp"

namespace zeckit {

namespace {

const char* const kLemmas = R"script(
def odd "?msd_fib Ek n=2*k+1":
def double1 "?msd_fib z=2*n+1":
reg shift msd_fib msd_fib "([0,0]|[0,1][1,1]*[1,0])*":
eval lem4 "?msd_fib Ax,y,z ($shift(x,y) & $shift(y,z)) => z=x+y":
eval fab "?msd_fib Aa,b,c,d,x ($phin(a,x) & (b=x|b=x+1) & c=a+b
   & d=b+c) => $shift(c,d)":
)script";

const char* const kWythoff = R"script(
eval w1_func1 "?msd_fib An (n>=1) => Ex $w1(n,x)":
eval w1_func2 "?msd_fib ~En,x,y n>=1 & x!=y & $w1(n,x) & $w1(n,y)":
eval increasing_w "?msd_fib An,x,y (n>=1 & $w1(n,x) & $w1(n+1,y)) => x<y":
def fw "?msd_fib Ey $phin(n+1,y) & z+1=y":
def w2 "?msd_fib Ex $w1(i,x) & $fw(x,z)":
def w3 "?msd_fib Ex,y $w1(i,x) & $w2(i,y) & z=x+y":
def wc3_mem "?msd_fib Ei i>=1 & $w3(i,n)":
reg all0 msd_fib "0*":
concat wcols3 wc3_mem all0:
alphabet wcols msd_fib $wcols3:
def sw "?msd_fib (Ei i>=1 & $w2(i,n)) | $wcols(n)":
def chk1 "?msd_fib (~$sw(n)) & Aip,x (ip<i & $w1(ip,x)) => n!=x":
# checks if x doesn't appear in set T_i
def mex "?msd_fib $chk1(i,x) & Ay (y>=1 & $chk1(i,y)) => y>=x":
# check if x is the smallest of all of these
eval chk "?msd_fib Ai,x (i>=2 & $mex(i,x)) => $w1(i,x)":
def morrison1 "?msd_fib Ey $phin(n,y) & $phin(y,z)":
def morrison2 "?msd_fib Ey $phin(n,y) & $phi2n(y,z)":
eval check_m1 "?msd_fib An,z1,z2 (n>=1 & $morrison1(n,z1) & $morrison2(n,z2))
   => $fw(z1,z2)":
eval prop5a "?msd_fib Ai,x,y (i>=1 & $w1(i,x) & $phi2n(i,y)) => x+1=y":
eval prop5b "?msd_fib Ai,x,y (i>=1 & $w2(i,x) & $phin(i,y)) => x+1=2*y+i":
def left "?msd_fib Ei,x,y $w1(i,x) & $w2(i,y) & z+x=y":
def wc3_memb "?msd_fib Ei i>=1 & $w3(i,n)":
reg even0 msd_fib "(00)*":
concat w3even wc3_memb even0:
alphabet w3e msd_fib $w3even:
def right "?msd_fib (Ej j>=1 & $w1(j,n)) | $w3e(n)":
eval checkeq "?msd_fib An (n>=1) => ($left(n) <=> $right(n))":
)script";

const char* const kStolarsky = R"script(
eval s1_func1 "?msd_fib An (n>=1) => Ex $s1(n,x)":
eval s1_func2 "?msd_fib ~En,x,y n>=1 & x!=y & $s1(n,x) & $s1(n,y)":
eval increasing_s "?msd_fib An,x,y (n>=1 & $s1(n,x) & $s1(n+1,y)) => x<y":
def s2 "?msd_fib En,y $s1(i,n) & $phin(2*n,y) & z=(y+1)/2":
def s3 "?msd_fib Ex,y $s1(i,x) & $s2(i,y) & z=x+y":
def sc2_mem "?msd_fib Ei i>=1 & $s2(i,n)":
reg all0 msd_fib "0*":
concat scol sc2_mem all0:
alphabet scols msd_fib $scol:
def chks1 "?msd_fib (~$scols(n)) & Aj,x (j<i & $s1(j,x)) => n!=x":
def mexs "?msd_fib $chks1(i,x) & Ay (y>=1 & $chks1(i,y)) => y>=x":
eval chks2 "?msd_fib Ai,x (i>=2 & $mexs(i,x)) => $s1(i,x)":
eval thms1 "?msd_fib An,x (n>=1) =>
   ($s1(n,x) <=> Ey,z $phin(2*n-1,y) & z=y/2 & x=z+n)":
eval thms2 "?msd_fib An,x (n>=1) => ($s2(n,x) <=> Ey $phin(2*n-1,y) & x=y+n)":
eval stol_conjecture "?msd_fib An,x,y (n>=2 & $s1(n,x) & $s2(n,y))
=> Ei,a,b 1<=i & i<n & $s1(i,a) & $s2(i,b) & (y=x+a|y=x+b)":
def which "?msd_fib n>=1 & Ex,y,i,a 1<=i & i<n & $s1(n,x) & $s2(n,y) &
$s1(i,a) & y=x+a":
eval cond "?msd_fib An (n>=1) => ((Ei,x,y,z $s1(n,x) & $s2(n,y)
   & $s1(i,z) & y=x+z) <=> (Ek,t $phin(2*k-1,t) & n=t/2+1))":
def delta "?msd_fib Ex,y,w $s1(n,x) & $phin(x,y) & $s2(n,w) & w=y+z":
def l1 "?msd_fib Ex $phin(2*n-1,x) & z=(x+3)/2":
# automaton computing floor(gamma + g*n)
def l2 "?msd_fib Ex $phin(2*n-1,x) & z=(x/2)+2":
# automaton computing floor(gamma+ g*n + 1/2)
def l3 "?msd_fib Ex,y $l1(n,x) & $l2(n,y) & x=y":
# automaton deciding if fractional part of gamma+g*n < 1/2
eval tmp "?msd_fib An (n>=1) => ($l3(n) <=> $delta(n,1))":
# check they are the same, result is TRUE
)script";

const char* const kDual = R"script(
eval d1_func1 "?msd_fib An (n>=1) => Ex $d1(n,x)":
eval d1_func2 "?msd_fib ~En,x,y n>=1 & x!=y & $d1(n,x) & $d1(n,y)":
eval increasing_d "?msd_fib An,x,y (n>=1 & $d1(n,x) & $d1(n+1,y)) => x<y":
def fd "?msd_fib Ex $phin(n-1,x) & z=x+2":
def d2 "?msd_fib Ex $d1(i,x) & $fd(x,z)":
def d3 "?msd_fib Ex,y $d1(i,x) & $d2(i,y) & z=x+y":
def dc3_mem "?msd_fib Ei i>=1 & $d3(i,n)":
reg all0 msd_fib "0*":
concat dcol dc3_mem all0:
alphabet dcols msd_fib $dcol:
def dw "?msd_fib (Ei i>=1 & $d2(i,n)) | $dcols(n)":
def chkd1 "?msd_fib (~$dw(n)) & Aj,x (j<i & $d1(j,x)) => n!=x":
def mexd "?msd_fib $chkd1(i,x) & Ay (y>=1 & $chkd1(i,y)) => y>=x":
eval chkd2 "?msd_fib Ai,x (i>=2 & $mexd(i,x)) => $d1(i,x)":
eval chkd1 "?msd_fib Ai,x,y (i>=2 & $d1(i,x) & $phin(i-1,y)) => x=y+i+1":
def ddelta "?msd_fib Ex,y,t $d1(i,x) & $d2(i,y) & $phin(x,t) & z+t=y":
eval checka "?msd_fib Ai (i>=2) => $ddelta(i,0)":
def cond "?msd_fib Ek,x k>=1 & $phin(k,x) & i=x+k+1":
def d1_alt "?msd_fib ($cond(i) & Ex $phin(i,x) & z=x+i) |
(~$cond(i) & Ex $phin(i,x) & z+1=x+i)":
eval checkb "?msd_fib Ai,x,y (i>=1 & $d1(i,x) & $d1_alt(i,y)) => x=y":
)script";

const char* const kEfc = R"script(
eval efc1_func1 "?msd_fib An (n>=1) => Ex $efc1(n,x)":
eval efc1_func2 "?msd_fib ~En,x,y n>=1 & x!=y & $efc1(n,x) & $efc1(n,y)":
eval increasing_efc "?msd_fib An,x,y (n>=1 & $efc1(n,x) & $efc1(n+1,y)) => x<y":
def efc2 "?msd_fib (i=1&z=2)| (i>=2 & Ex,y,k,r $efc1(i,x) & $phin(x,y) &
   i=2*k+r & r<=1 & z=y+(1-r))":
def efc3 "?msd_fib Ex,y $efc1(i,x) & $efc2(i,y) & z=x+y":
def efcg3 "?msd_fib Ei i>=1 & $efc3(i,n)":
reg all0 msd_fib "0*":
concat efc_zero3 efcg3 all0:
alphabet efc_cols3 msd_fib $efc_zero3:
def efc_cols2 "?msd_fib (Em m>=1 & $efc2(m,n))|$efc_cols3(n)":
def chk_efc1 "?msd_fib (~$efc_cols2(n)) & Aj,x (j<i & $efc1(j,x)) => n!=x":
def mex_efc "?msd_fib $chk_efc1(i,x) & Ay (y>=1 & $chk_efc1(i,y)) => y>=x":
eval chk_efc "?msd_fib Ai,x (i>=2 & $mex_efc(i,x)) => $efc1(i,x)":
eval efc_even "?msd_fib An,x,y (n>=1 & $efc1(2*n,x) & $phin(n,y))
   => x=2*y+2*n":
eval efc_odd "?msd_fib An,x,y (n>=1 & $efc1(2*n+1,x) & $phin(n,y))
   => x=2*y+2*n+2":
)script";

const char* const kEsc = R"script(
eval esc1_func1 "?msd_fib An (n>=1) => Ex $esc1(n,x)":
eval esc1_func2 "?msd_fib ~En,x,y n>=1 & x!=y & $esc1(n,x) & $esc1(n,y)":
eval increasing_esc "?msd_fib An,x,y (n>=1 & $esc1(n,x) & $esc1(n+1,y)) => x<y":
def esc2 "?msd_fib Ex,y,r $esc1(i,x) & $phin(x,y) & i=r+2*(i/2) & z=y+r":
def esc3 "?msd_fib Ex,y $esc1(i,x) & $esc2(i,y) & z=x+y":
def escg3 "?msd_fib Ei i>=1 & $esc3(i,n)":
reg all0 msd_fib "0*":
concat esc_zero3 escg3 all0:
alphabet esc_cols3 msd_fib $esc_zero3:
def esc_cols2 "?msd_fib (Em m>=1 & $esc2(m,n))|$esc_cols3(n)":
def chk_esc1 "?msd_fib (~$esc_cols2(n)) & Aj,x (j<i & $esc1(j,x)) => n!=x":
def mex_esc "?msd_fib $chk_esc1(i,x) & Ay (y>=1 & $chk_esc1(i,y)) => y>=x":
eval chk_esc "?msd_fib Ai,x (i>=2 & $mex_esc(i,x)) => $esc1(i,x)":
eval tmp "?msd_fib Ai,x (i>=1 & $esc2(i,x)) => Ek x=2*k":
)script";

const char* const kK100 = R"script(
eval k100_func1 "?msd_fib An (n>=1) => Ex $k100(n,x)":
eval k100_func2 "?msd_fib ~En,x,y n>=1 & x!=y & $k100(n,x) & $k100(n,y)":
eval increasing_k100 "?msd_fib An,x,y (n>=1 & $k100(n,x) & $k100(n+1,y)) => x<y":
def is1mod3 "?msd_fib (z=1 & Ek n=3*k+1)|(z=0 & ~Ek n=3*k+1)":
def k1002 "?msd_fib Ex,y,r $k100(i,x) & $phin(x,y) & $is1mod3(i,r) & z=y+r":
def k1003 "?msd_fib Ex,y $k100(i,x) & $k1002(i,y) & z=x+y":
def k100g3 "?msd_fib Ei i>=1 & $k1003(i,n)":
reg all0 msd_fib "0*":
concat k100_zero3 k100g3 all0:
alphabet k100_cols3 msd_fib $k100_zero3:
def k100_cols2 "?msd_fib (Em m>=1 & $k1002(m,n))|$k100_cols3(n)":
def chk_k100 "?msd_fib (~$k100_cols2(n)) & Aj,x (j<i & $k100(j,x)) => n!=x":
def mex_k100 "?msd_fib $chk_k100(i,x) & Ay (y>=1 & $chk_k100(i,y)) => y>=x":
eval chk_k100 "?msd_fib Ai,x (i>=2 & $mex_k100(i,x)) => $k100(i,x)":
eval col3 "?msd_fib Ai,x (i>=1 & $k1003(i,x)) => ~Ek x=3*k+2":
)script";

const std::map<std::string, std::string>& suites() {
    static const std::map<std::string, std::string> all = {
        {"lemmas", kLemmas}, {"wythoff", kWythoff}, {"stolarsky", kStolarsky}, {"dual", kDual},
        {"efc", kEfc},       {"esc", kEsc},         {"k100", kK100},
    };
    return all;
}

}  // namespace

const std::string& suite_script(const std::string& name) {
    auto it = suites().find(name);
    if (it == suites().end()) throw std::invalid_argument("no theorem suite named '" + name + "'");
    return it->second;
}

std::vector<std::string> suite_names() {
    return {"lemmas", "wythoff", "stolarsky", "dual", "efc", "esc", "k100"};
}

}  // namespace zeckit
