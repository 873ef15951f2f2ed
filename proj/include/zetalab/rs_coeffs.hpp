// Chebyshev tables for the Riemann-Siegel remainder terms C0..C4,
// domain p in [0,1].  Generated by scripts/gen_rs_coeffs.py; do not edit.
#pragma once

#include <array>

namespace zetalab::detail {

inline constexpr std::array<double, 64> kRsC0 = {
    0.6426672862397687,
    -9.796405405444734e-16,
    0.2719729999978551,
    -8.972813800562211e-16,
    0.010738605819340438,
    -1.0229874671172375e-15,
    -0.0013743815296337488,
    -1.0923425496336603e-15,
    -0.00012468221880340113,
    -1.1270200908918715e-15,
    -5.764599708457975e-07,
    -9.796405405444728e-16,
    2.728067430227643e-07,
    -7.802446783097572e-16,
    8.077952972860346e-09,
    -7.802446783097571e-16,
    -2.0884607307639448e-10,
    -1.0923425496336603e-15,
    -1.3115603111862027e-11,
    -8.691058777839242e-16,
    -1.41614409113221e-14,
    -9.395446334646663e-16,
    9.982797189707615e-15,
    -7.59654888187694e-16,
    -6.068569720187e-17,
    -8.116712000750113e-16,
    -1.7338770629105714e-17,
    -7.797028417275975e-16,
    4.334692657276429e-18,
    -7.585712150233755e-16,
    1.0403262377463433e-16,
    -7.672406003379281e-16,
    4.117958024412608e-17,
    -7.672406003379281e-16,
    -2.797231355398696e-17,
    -6.588732839060177e-16,
    8.66938531455286e-18,
    -7.845793709670339e-16,
    6.285304353050822e-17,
    -9.016160727134973e-16,
    7.368977517369932e-17,
    -9.623017699153678e-16,
    8.669385314552866e-18,
    -7.715752929952047e-16,
    6.93550825164229e-17,
    -5.743467770891269e-16,
    0.0,
    -5.244978115304483e-16,
    1.083673164319108e-16,
    -5.461712748168303e-16,
    7.15224288450611e-17,
    -7.303957127510782e-16,
    2.0373055489199238e-16,
    -7.368977517369939e-16,
    2.2540401817837466e-16,
    -6.718773618778474e-16,
    2.5141217412203314e-16,
    -6.371998206196363e-16,
    1.4737955034739874e-16,
    -7.455671370515463e-16,
    3.2510194929573215e-17,
    -7.282283664224404e-16,
    -9.319589213144329e-17,
    -7.455671370515462e-16,
};

inline constexpr std::array<double, 65> kRsC1 = {
    -4.103086715838201e-19,
    0.010697913921003001,
    -1.3004077971829292e-17,
    0.017170651243377875,
    -2.2215299868541703e-17,
    0.0027932111497884597,
    -1.5510072164317228e-17,
    -3.637565371929105e-05,
    -7.72117129577364e-18,
    -2.7108955231159965e-05,
    -1.7355703022298202e-17,
    -1.0483749866820393e-06,
    -2.5940426370888625e-17,
    5.8864671649431174e-08,
    -2.505994192487935e-17,
    4.322967261622184e-09,
    -1.4087751136148398e-17,
    -1.1369592702367156e-11,
    -6.502038985914645e-18,
    -6.699828031764967e-12,
    1.8964280375584384e-18,
    -1.0079718208341409e-13,
    2.7091829107977682e-18,
    5.162551225243455e-15,
    1.1378568225350626e-17,
    1.6417648439434475e-16,
    2.0725249267602922e-17,
    4.02990957981168e-18,
    5.4183658215955364e-18,
    -2.9801012018775467e-18,
    9.659930316313296e-18,
    -3.2510194929573225e-18,
    1.2462241389669735e-17,
    -2.9801012018775456e-18,
    1.6356691823941523e-17,
    -1.1378568225350634e-17,
    6.09566154929498e-18,
    -4.876529239435984e-18,
    -7.043875568074197e-18,
    -9.753058478871966e-18,
    8.80484446009275e-18,
    2.7091829107977697e-19,
    -9.482140187792198e-19,
    1.0294895061031524e-17,
    1.164948651643041e-17,
    1.2462241389669735e-17,
    9.24508668309739e-18,
    1.462958771830796e-17,
    1.788060721126528e-17,
    2.4382646197179922e-17,
    2.0589790122063042e-17,
    2.5195401070419242e-17,
    1.1378568225350638e-17,
    3.657396929576992e-17,
    7.856630441313539e-18,
    1.0836731643191085e-17,
    5.147447530515765e-18,
    1.5239153873237472e-17,
    -3.115560347417437e-18,
    -9.312816255867334e-18,
    -1.0565813352111295e-17,
    -1.40877511361484e-17,
    1.5577801737087177e-18,
    -1.6255097464786617e-17,
    1.9777035248823723e-17,
};

inline constexpr std::array<double, 64> kRsC2 = {
    0.0031461158539888975,
    2.7250993603987062e-15,
    -0.0023087838845307824,
    -8.300259142956665e-16,
    5.769820766690439e-05,
    2.881216025633427e-16,
    0.0003523886202366576,
    -6.244666609388856e-17,
    2.5246667458685742e-05,
    -3.894450434271792e-19,
    -3.4428211971915036e-06,
    -1.6932393192486048e-18,
    -3.535074556620579e-07,
    -6.231120694834867e-18,
    3.730830184086237e-09,
    -5.5538249671354236e-18,
    1.2776951870338512e-09,
    -2.5737237652578803e-18,
    2.1874616206126058e-11,
    -4.791867273473554e-18,
    -1.914141522048894e-12,
    -3.801322271713119e-18,
    -6.562748388466983e-14,
    -4.436287016431344e-18,
    1.2612939689082858e-15,
    -5.909405224177632e-18,
    8.174959433332264e-17,
    -5.0204545815721136e-18,
    -2.370535046948047e-19,
    -5.2151771032857065e-18,
    0.0,
    -5.045853171360845e-18,
    4.3177602640839435e-19,
    -5.519960180750454e-18,
    4.465918704518196e-19,
    -6.231120694834871e-18,
    -2.709182910797769e-19,
    -5.469163001172996e-18,
    -5.757013685445257e-19,
    -5.553824967135425e-18,
    3.7251265023469324e-19,
    -4.402422230046376e-18,
    2.7091829107977707e-19,
    -5.147447530515762e-18,
    -1.422321028168829e-18,
    -6.671362917839505e-18,
    1.3545914553988849e-19,
    -8.059819159623366e-18,
    -1.2191323098589966e-18,
    -7.179334713614088e-18,
    -5.079717957745817e-19,
    -6.5528361654921014e-18,
    -1.2529970962439691e-18,
    -5.824743258215209e-18,
    -1.1852675234740254e-18,
    -7.721171295773649e-18,
    -1.5577801737087185e-18,
    -5.926337617370128e-18,
    -1.2868618826289413e-18,
    -4.808799666666042e-18,
    -1.5239153873237445e-19,
    -5.706216505867802e-18,
    1.2699294894364547e-19,
    -5.621554539905372e-18,
};

inline constexpr std::array<double, 54> kRsC3 = {
    3.492906766387756e-15,
    7.1232561374936e-05,
    8.929365279630293e-15,
    0.0002323430532347894,
    -1.2477565205508937e-15,
    -0.0001292991205444806,
    6.594585097457327e-16,
    1.807449643179285e-05,
    -2.541102451497981e-16,
    6.526185186546453e-06,
    5.756272893243086e-17,
    -1.1696365455590361e-07,
    -5.166496472857306e-18,
    -7.349476106503976e-08,
    -1.1947919946447968e-18,
    -1.775091015303312e-09,
    1.4180879298707072e-19,
    2.5555529269218457e-10,
    -1.2699294894364542e-19,
    1.1376636840387325e-11,
    4.391839484301071e-20,
    -3.349864412436626e-13,
    -1.015943591549163e-19,
    -2.5537247040033187e-14,
    2.1165491490607564e-20,
    6.787878948495299e-17,
    1.5239153873237443e-19,
    2.9851809198352906e-17,
    1.4815844043425294e-20,
    2.6165838855263615e-19,
    7.831231851524801e-20,
    2.9631688086850595e-20,
    3.3864786384972104e-20,
    -2.9631688086850595e-20,
    1.6297428447767823e-19,
    -3.8097884683093643e-20,
    7.619576936618725e-20,
    1.2699294894364541e-20,
    -4.233098298121513e-20,
    -6.34964744718227e-20,
    1.037109083039771e-19,
    1.5874118617955684e-21,
    5.07971795774582e-20,
    4.233098298121515e-20,
    1.0291720237307933e-19,
    1.1852675234740238e-19,
    8.466196596243032e-20,
    4.233098298121516e-20,
    2.5398589788729094e-19,
    3.217154706572351e-19,
    3.386478638497211e-20,
    1.015943591549163e-19,
    8.466196596243035e-20,
    3.132492740609924e-19,
};

inline constexpr std::array<double, 64> kRsC4 = {
    0.00016765745209167137,
    1.426749998359514e-10,
    -0.00022728769074291275,
    -4.314957310426266e-11,
    6.477387204895078e-05,
    1.5298711610600605e-11,
    -8.492200590400897e-06,
    -3.088844684123522e-12,
    -2.616140687451699e-06,
    1.1491551100511892e-13,
    8.336764878946924e-07,
    1.313251271405327e-13,
    6.324704130669135e-08,
    -3.41331690501713e-14,
    -1.0059949297007198e-08,
    1.2773797424411475e-15,
    -7.822677554628502e-10,
    5.731361109758642e-16,
    3.167658375616349e-11,
    -3.196412524911555e-17,
    3.5006947337194744e-12,
    -4.965424303696536e-18,
    -1.4314649438026005e-14,
    -8.042886766430872e-20,
    -7.269194924286609e-15,
    -3.957946908743614e-19,
    -8.777752630984768e-17,
    -2.6245209448353374e-19,
    8.152947322182033e-18,
    -3.2171547065723513e-19,
    5.92633761737012e-20,
    -3.04783077464749e-19,
    3.968529654488919e-20,
    -3.2594856895535656e-19,
    4.33892575557455e-20,
    -4.402422230046376e-19,
    -1.227598506455239e-19,
    -3.3229821640253884e-19,
    -1.0794400660209858e-19,
    -3.0478307746474895e-19,
    5.079717957745817e-20,
    -1.5239153873237457e-19,
    1.9048942341546825e-20,
    -3.174823723591136e-19,
    -1.6085773532861757e-19,
    -4.1299165271048013e-19,
    5.079717957745819e-20,
    -4.910394025820958e-19,
    -6.349647447182273e-20,
    -4.402422230046375e-19,
    -4.233098298121514e-20,
    -3.7462919938375386e-19,
    -1.6085773532861766e-19,
    -4.48708419600881e-19,
    -1.2699294894364557e-19,
    -5.122048940727037e-19,
    -1.079440066020987e-19,
    -3.6404645363845073e-19,
    -9.312816255867338e-20,
    -2.9843343001756686e-19,
    -1.3757569468894917e-20,
    -3.6404645363845025e-19,
    -2.5398589788729094e-20,
    -3.6192990448938954e-19,
};

} // namespace zetalab::detail
