#pragma once

// Frozen reference listings: first-kind triangle for (2,1), n <= 8, and the
// normalized coefficients <k,j>* j! (-1)^(j-1) for (2,1), (3,1), (3,2),
// rows j = 0..8, columns k = 0..6, as "p/q" strings.

#include <array>

namespace fixtures {

inline constexpr std::array<std::array<const char*, 9>, 9> kTriangle21 = {{
    {{"1", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "1", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "3", "1", "0", "0", "0", "0", "0", "0"}},
    {{"0", "15", "8", "1", "0", "0", "0", "0", "0"}},
    {{"0", "105", "71", "15", "1", "0", "0", "0", "0"}},
    {{"0", "945", "744", "206", "24", "1", "0", "0", "0"}},
    {{"0", "10395", "9129", "3010", "470", "35", "1", "0", "0"}},
    {{"0", "135135", "129072", "48259", "9120", "925", "48", "1", "0"}},
    {{"0", "2027025", "2071215", "852957", "185059", "22995", "1645", "63", "1"}},
}};

inline constexpr std::array<std::array<const char*, 7>, 9> kStar21 = {{
    {{"0", "0", "0", "0", "0", "0", "0"}},
    {{"9", "3", "1", "1/3", "1/9", "1/27", "1/81"}},
    {{"7", "1", "1", "7/15", "41/225", "223/3375", "1169/50625"}},
    {{"1", "1", "1", "19/35", "859/3675", "34739/385875", "1323019/40516875"}},
    {{"1", "1", "1", "187/315", "27161/99225", "3451843/31255875", "406586609/9845600625"}},
    {{"1", "1", "1", "437/693", "735197/2401245", "1066933061/8320313925", "1418417467373/28829887750125"}},
    {{"1", "1", "1", "1979/3003", "45087479/135270135", "877474863971/6093243231075", "15505503106933439/274470141343773375"}},
    {{"1", "1", "1", "4387/6435", "103349119/289864575", "2065307132299/13056949780875", "1488524941286431/23526012115180575"}},
    {{"1", "1", "1", "76627/109395", "31562623583/83770862175", "10971718559046811/64148794273438875", "683894055421671560539/9824580289359984022875"}},
}};

inline constexpr std::array<std::array<const char*, 7>, 9> kStar31 = {{
    {{"0", "0", "0", "0", "0", "0", "0"}},
    {{"16", "4", "1", "1/4", "1/16", "1/64", "1/256"}},
    {{"-17", "1", "1", "5/14", "41/392", "311/10976", "2273/307328"}},
    {{"1", "1", "1", "59/140", "2671/19600", "107369/2744000", "4060291/384160000"}},
    {{"1", "1", "1", "212/455", "133849/828100", "73174943/1507142000", "37005870001/2742998440000"}},
    {{"1", "1", "1", "727/1456", "1936973/10599680", "4393719979/77165670400", "9104269630637/561766080512000"}},
    {{"1", "1", "1", "7271/13832", "384155263/1913242240", "17071846526411/264639666636800", "686298711281124727/36604958689202176000"}},
    {{"1", "1", "1", "23789/43472", "14322370919/66143517440", "7187615461845233/100638684655308800", "3237486239486747349191/153123771476745445376000"}},
    {{"1", "1", "1", "76801/135850", "238206415289/1033492460000", "611558324636496331/7862397238696000000", "1400156984227714635455249/59813973233103689600000000"}},
}};

inline constexpr std::array<std::array<const char*, 7>, 9> kStar32 = {{
    {{"0", "0", "0", "0", "0", "0", "0"}},
    {{"25", "5", "1", "1/5", "1/25", "1/125", "1/625"}},
    {{"-14", "2", "1", "11/40", "103/1600", "899/64000", "7567/2560000"}},
    {{"4", "2", "1", "139/440", "15757/193600", "1609291/85184000", "155016733/37480960000"}},
    {{"4", "2", "1", "527/1540", "446837/4743200", "334869917/14609056000", "233183599997/44995892480000"}},
    {{"4", "2", "1", "1889/5236", "28606807/274156960", "378441183599/14354858425600", "4602491925840703/751620387164416000"}},
    {{"4", "2", "1", "19619/52360", "61764761/548313920", "4214471373881/143548584256000", "10491182677877357/1503240774328832000"}},
    {{"4", "2", "1", "66337/172040", "4956449573/41436866240", "7985964568560547/249507946377536000", "466567679887167456041/60095485932707810816000"}},
    {{"4", "2", "1", "110258/279565", "43971566839/350141519728", "4710810017671083829/137042239547861648000", "3642461006944413986125043/429096793431016946178944000"}},
}};

}  // namespace fixtures
