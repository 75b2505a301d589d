// Generated by tests/oracle/reference_values.py -- do not edit.
// mpmath at 80 digits, printed to 45 significant digits.
#pragma once

namespace binsum::reference {

inline constexpr const char* kPk2 = "2.58496250072115618145373894394781650875981441";
inline constexpr const char* kPk10 = "17.4952616914723143186437611346997264690364428";
inline constexpr const char* kF2AtQuarter = "0.962805183624616611961604193236723705329142242";
inline constexpr const char* kF5AtNineTenths = "0.795529860491340258810073970964372511145709832";
inline constexpr const char* kLegendreRhs2Quarter = "0.962805183624616611961604193236723705329142242";
inline constexpr const char* kLegendreRhs5NineTenths = "0.795529860491340258810073970964372511145709832";
inline constexpr const char* kBinomialwise52Lhs = "0.000551956424280561887841662448208513197039581266";
inline constexpr const char* kBinomialwise52Rhs = "0.00214343750000000000000000000000000000000000000";
inline constexpr const char* kBinomialwise121Lhs = "0.0252583128643970642007431300405890291506016728";
inline constexpr const char* kBinomialwise121Rhs = "0.0313810596090000000000000000000000000000000000";
inline constexpr const char* kPhi10Tenth = "0.0520104984721128757639859399656097608589690181";
inline constexpr const char* kPhi10Half = "-0.359068397454701474764091774666127072319997262";
inline constexpr const char* kPhi50Fiftieth = "0.550868647861099254292985571541676669746520173";
inline constexpr const char* kTCrit10 = "0.172378272974692986362921118915283451437599542";
inline constexpr const char* kTCrit100 = "0.108972113093866229248575565286034525158820757";
inline constexpr const char* kA2Quarter = "0.00960923625084661166383610357934131772168640879";
inline constexpr const char* kB2Quarter = "0.176328462451407812933323325437205432818351764";
inline constexpr const char* kC2Quarter = "-0.0172117679596378094356142558335987388630831598";
inline constexpr const char* kA3Hundredth = "0.0000949587691886721827941417673335117519625236056";
inline constexpr const char* kC5499 = "-0.00000114031009930199635832076955589780393698767342";
inline constexpr const char* kPsi39 = "1.82986696388500835055780039553713342765639404";
inline constexpr const char* kSuff32Lhs = "4.73308677897710122648608250222862500866289830";
inline constexpr const char* kSuff32Rhs = "4.29697559068053351469890707652913098944611446";
inline constexpr const char* kWhiteley240 = "1.63299316185545206546485604980392759464396499";
inline constexpr const char* kWhiteley231 = "1.91485421551267621995020382273964310607342149";
inline constexpr const char* kR2 = "0.773705614469083173740492276935641752930283719";
inline constexpr const char* kPowerMeanR231 = "1.93998553477479489662913695209040702384838548";
inline constexpr const char* kPowerMeanTwoThirds31 = "1.91116775826725856605550460202766401789774773";
inline constexpr const char* kPowerMeanHalf41 = "2.25000000000000000000000000000000000000000000";
inline constexpr const char* kWhiteley241 = "2.34520787991171477728281505677223314029411418";
inline constexpr const char* kH2AtQuarter = "0.762259526419164492536396189032351068801775985";
inline constexpr const char* kCtilde2Quarter = "0.00482276638921997294827714366930252379900100839";
inline constexpr const char* kFactored2Quarter = "0.950417228136048928585521952125277161446512081";
inline constexpr const char* kCtilde449 = "0.0000000216486481990495457544767642997510240748765459";
inline constexpr const char* kFactored449 = "0.00000102081648484620630101155190759012730320277678";
inline constexpr const char* kProbineq310K5Lhs = "0.819249672461887645146648045338188636731181221";
inline constexpr const char* kProbineq310K5Rhs = "0.822384344103966354008757543791770324980413943";
inline constexpr const char* kExpansion21E4 = "0.166666666805555555787037037519290124582047328";
inline constexpr const char* kExpansion51E4 = "0.222222222733686069370958273265959417178608016";
inline constexpr const char* kEnergyBound3Points = "17.1135674840733529060513636956710240286209620";

inline constexpr bool kStirling1 = true;
inline constexpr bool kStirling100 = true;
inline constexpr bool kStirling10000 = true;
inline constexpr bool kPkBounds1 = true;
inline constexpr bool kPkBounds2 = true;
inline constexpr bool kPkBounds10 = true;

}  // namespace binsum::reference
