#pragma once
// generated by tests/oracles/gen_oracles.py (mpmath, 40 digits); do not edit

#include <complex>

namespace oracle {

struct F21 { double a, b, c; std::complex<double> z, value; };
struct OnCut { double a, b, c, x; std::complex<double> upper; double abs2; };
struct RatioAt { int n1, n2, m; double a, b, c; std::complex<double> z, value; };
struct ImOnCut { int n1, n2, m; double a, b, c, x, im_upper; };
struct Taylor { int n1, n2, m; double a, b, c; double coeffs[8]; };

inline constexpr F21 hyp2f1_values[] = {
    {0.3, 0.7, 1.4, {0.25, 0.0}, {1.0426139320386554, 0.0}},
    {1.0, 1.0, 2.0, {0.5, 0.0}, {1.3862943611198906, 0.0}},
    {-3.0, 1.7, 1.7, {0.25, 0.0}, {0.421875, 0.0}},
    {0.5, 0.25, 1.25, {-0.4, 0.3}, {0.963401688473959, 0.0222985445619547}},
    {0.3, 0.7, 1.9, {-2.0, 0.0}, {0.8649493240635775, 0.0}},
    {0.5, 0.5, 1.0, {-0.9, 0.1}, {0.8459330062122825, 0.012010634516745304}},
    {2.5, -0.7, 1.3, {-5.0, 0.0}, {5.369685039244209, 0.0}},
    {0.3, 0.7, 1.9, {0.9, 0.0}, {1.1786297224210023, 0.0}},
    {0.3, 0.7, 1.4, {0.8, 0.3}, {1.1556798144978053, 0.13117927504557508}},
    {1.2, 0.4, 0.7, {0.95, 0.0}, {10.637572088797608, 0.0}},
    {0.3, 0.7, 1.9, {-40.0, 0.0}, {0.5139429241620425, 0.0}},
    {0.3, 0.6, 2.4, {3.0, 4.0}, {0.8992777889220132, 0.2498739234356455}},
    {1.5, 0.25, 2.2, {-10000.0, 0.0}, {0.11499234172099453, 0.0}},
    {0.7, 0.2, 1.1, {10.0, -1.0}, {0.6672941205961437, -0.38189261893694015}},
    {0.3, 0.7, 1.9, {0.5, 0.866}, {1.0148630876279792, 0.11731022742905009}},
    {0.8, -0.4, 1.3, {0.5, -0.85}, {0.9273811527525332, 0.24345571320664647}},
    {1.0, 1.0, 2.0, {-3.0, 0.0}, {0.4620981203732969, 0.0}},
    {0.5, 0.5, 1.0, {0.9, 0.0}, {1.6412644143423707, 0.0}},
    {0.5, 0.5, 1.0, {-7.0, 2.0}, {0.5503370067012048, 0.04221055907369236}},
    {1.0, 2.0, 3.0, {0.7, 0.5}, {1.2151969975589858, 0.8754823114888951}},
    {0.25, 1.25, 2.5, {-20.0, 0.0}, {0.5799901660269914, 0.0}},
    {1.0, 1.0, 2.5, {4.0, 0.1}, {-0.08459239770562796, 1.00955656434696}},
    {-1.7, -1.4, -2.6, {0.4, 0.0}, {0.6457460828649816, 0.0}},
    {-0.5, 1.3, -0.3, {-0.6, 0.0}, {0.10679132845033908, 0.0}},
    {0.5, -0.5, 0.25, {2.0, 2.0}, {0.820900386178361, -2.434135959312084}},
};

inline constexpr OnCut on_cut_values[] = {
    {1.0, 1.0, 2.0, 2.0, {7.8539816339744835e-31, 1.5707963267948966}, 2.4674011002723395},
    {1.0, 1.0, 2.0, 1.01, {4.559574441572367, 3.1104877758314786}, 30.464853291837017},
    {0.5, 0.5, 1.0, 1.5, {1.054648614831467, 0.9012862993604474}, 1.924600694180782},
    {0.5, 0.5, 1.0, 30.0, {0.18412484227333775, 0.36084762671579385}, 0.1641129672486024},
    {0.3, 0.7, 1.4, 3.0, {0.9063831492370993, 0.5715359362425353}, 1.1481837396375931},
    {0.3, 0.7, 1.9, 1.2, {1.301105867900029, 0.15797578857846256}, 1.7178328292608749},
    {0.3, 0.7, 1.9, 5.0, {0.8687364085409436, 0.5265740939573949}, 1.0319832239516684},
    {0.3, 0.6, 2.4, 100.0, {0.38787046146721066, 0.3669578705748578}, 0.28510157365562105},
    {2.5, 0.5, 2.0, 1.7, {-0.19511839932226702, 0.7251348780098257}, 0.5638917810604085},
    {1.0, 1.0, 2.5, 3.0, {0.0641186898964299, 1.282549830161864}, 1.649045273242261},
    {0.25, 1.25, 2.5, 7.0, {0.6921996434661004, 0.5380315862385426}, 0.768618334204959},
    {0.3, 0.7, 1.9, 1.00000001, {1.2527710326684813, 5.104552064598313e-08}, 1.5694352602932555},
};

inline constexpr RatioAt example_ratios[] = {
    {0, 1, 1, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.9268017862374858, 0.0}},
    {0, 1, 1, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.9731391325746632, 0.0}},
    {0, 1, 1, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.0228726929798981, 0.0}},
    {0, 1, 1, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.0397823441153726, 0.022960397518522278}},
    {0, 1, 1, 0.3, 0.7, 1.9, {-1.0, 1.5}, {0.9383361213393161, 0.04331750785092879}},
    {0, 1, 1, 0.3, 0.7, 1.9, {2.0, -0.5}, {1.013132743200912, -0.2131410590205677}},
    {0, 1, 0, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.8536431080631499, 0.0}},
    {0, 1, 0, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.9398285284420107, 0.0}},
    {0, 1, 0, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.059414366443345, 0.0}},
    {0, 1, 0, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.1034128123106386, 0.071787579522427}},
    {0, 1, 0, 0.3, 0.7, 1.9, {-1.0, 1.5}, {0.8660755910694382, 0.07516230418290167}},
    {0, 1, 0, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.8074908306272579, -0.3818112075424481}},
    {1, 1, 1, 0.3, 0.6, 2.4, {-2.0, 0.0}, {0.516881969316072, 0.0}},
    {1, 1, 1, 0.3, 0.6, 2.4, {-0.5, 0.0}, {0.7965938297806038, 0.0}},
    {1, 1, 1, 0.3, 0.6, 2.4, {0.3, 0.0}, {1.2017683223732987, 0.0}},
    {1, 1, 1, 0.3, 0.6, 2.4, {0.5, 0.2}, {1.353028666320533, 0.2403251161269539}},
    {1, 1, 1, 0.3, 0.6, 2.4, {-1.0, 1.5}, {0.545161284274194, 0.23965548800245917}},
    {1, 1, 1, 0.3, 0.6, 2.4, {2.0, -0.5}, {0.10336231481840802, -1.487242980468475}},
    {1, 1, 2, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.560169663654796, 0.0}},
    {1, 1, 2, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.8222409972978102, 0.0}},
    {1, 1, 2, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.166930910363317, 0.0}},
    {1, 1, 2, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.2921716101845129, 0.18597463552096008}},
    {1, 1, 2, 0.3, 0.7, 1.9, {-1.0, 1.5}, {0.5963992938532436, 0.23160041783926089}},
    {1, 1, 2, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.478383299134454, -1.511525335221009}},
    {0, 2, 2, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.8969403463891219, 0.0}},
    {0, 2, 2, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.96084878671501, 0.0}},
    {0, 2, 2, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.0346059414545656, 0.0}},
    {0, 2, 2, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.0603389359219089, 0.036237575274376946}},
    {0, 2, 2, 0.3, 0.7, 1.9, {-1.0, 1.5}, {0.9104860629920342, 0.05865276748798752}},
    {0, 2, 2, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.9695784898380331, -0.3188918145482055}},
    {0, 2, 0, 0.3, 0.6, 2.4, {-2.0, 0.0}, {0.7834688179336122, 0.0}},
    {0, 2, 0, 0.3, 0.6, 2.4, {-0.5, 0.0}, {0.9074202850733887, 0.0}},
    {0, 2, 0, 0.3, 0.6, 2.4, {0.3, 0.0}, {1.0968546321040085, 0.0}},
    {0, 2, 0, 0.3, 0.6, 2.4, {0.5, 0.2}, {1.1678043888724374, 0.12574963416086088}},
    {0, 2, 0, 0.3, 0.6, 2.4, {-1.0, 1.5}, {0.7973496581290839, 0.10496686576089173}},
    {0, 2, 0, 0.3, 0.6, 2.4, {2.0, -0.5}, {0.6384772469260637, -0.4853018338521833}},
    {1, 1, 0, 0.3, 0.6, 2.4, {-2.0, 0.0}, {0.4051224957383433, 0.0}},
    {1, 1, 0, 0.3, 0.6, 2.4, {-0.5, 0.0}, {0.721985682623653, 0.0}},
    {1, 1, 0, 0.3, 0.6, 2.4, {0.3, 0.0}, {1.3212706855023841, 0.0}},
    {1, 1, 0, 0.3, 0.6, 2.4, {0.5, 0.2}, {1.5545466977716085, 0.4589985577221503}},
    {1, 1, 0, 0.3, 0.6, 2.4, {-1.0, 1.5}, {0.40921395633896707, 0.24669312991997203}},
    {1, 1, 0, 0.3, 0.6, 2.4, {2.0, -0.5}, {-0.6373022169040575, -0.9491025914408104}},
    {0, 0, 1, 0.3, 0.7, 1.9, {-2.0, 0.0}, {1.0426989580281332, 0.0}},
    {0, 0, 1, 0.3, 0.7, 1.9, {-0.5, 0.0}, {1.0156688393314466, 0.0}},
    {0, 0, 1, 0.3, 0.7, 1.9, {0.3, 0.0}, {0.9866575957617262, 0.0}},
    {0, 0, 1, 0.3, 0.7, 1.9, {0.5, 0.2}, {0.9767936325993659, -0.013393565219137994}},
    {0, 0, 1, 0.3, 0.7, 1.9, {-1.0, 1.5}, {1.035970595885399, -0.025268546246375128}},
    {0, 0, 1, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.9923392331328013, 0.1243322844286645}},
    {0, 0, -1, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.8861668618268944, 0.0}},
    {0, 0, -1, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.9531999665660084, 0.0}},
    {0, 0, -1, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.0462111739003794, 0.0}},
    {0, 0, -1, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.080432187352719, 0.05583478407299878}},
    {0, 0, -1, 0.3, 0.7, 1.9, {-1.0, 1.5}, {0.8958365708317853, 0.05845956992003463}},
    {0, 0, -1, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.8502706460434228, -0.29696427253301516}},
    {0, 0, 2, 0.3, 0.7, 1.9, {-2.0, 0.0}, {1.0661150606359329, 0.0}},
    {0, 0, 2, 0.3, 0.7, 1.9, {-0.5, 0.0}, {1.0236610522491398, 0.0}},
    {0, 0, 2, 0.3, 0.7, 1.9, {0.3, 0.0}, {0.9804234609214193, 0.0}},
    {0, 0, 2, 0.3, 0.7, 1.9, {0.5, 0.2}, {0.9660178093328253, -0.01897594672298935}},
    {0, 0, 2, 0.3, 0.7, 1.9, {-1.0, 1.5}, {1.0544824857283703, -0.040178897183358236}},
    {0, 0, 2, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.9660907066331653, 0.18404221223906833}},
    {0, 1, 2, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.9691054926893347, 0.0}},
    {0, 1, 2, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.9905504558758386, 0.0}},
    {0, 1, 2, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.0062505909741188, 0.0}},
    {0, 1, 2, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.0106605057227795, 0.0041510623643948395}},
    {0, 1, 2, 0.3, 0.7, 1.9, {-1.0, 1.5}, {0.9777903706646321, 0.021592556698428935}},
    {0, 1, 2, 0.3, 0.7, 1.9, {2.0, -0.5}, {1.0748346021316573, -0.06332748868974758}},
    {0, -1, 0, 0.3, 0.7, 1.9, {-2.0, 0.0}, {1.2438754391105125, 0.0}},
    {0, -1, 0, 0.3, 0.7, 1.9, {-0.5, 0.0}, {1.0723499623867594, 0.0}},
    {0, -1, 0, 0.3, 0.7, 1.9, {0.3, 0.0}, {0.9492608662976992, 0.0}},
    {0, -1, 0, 0.3, 0.7, 1.9, {0.5, 0.2}, {0.9135372878682194, -0.04112678407553331}},
    {0, -1, 0, 0.3, 0.7, 1.9, {-1.0, 1.5}, {1.1595218724077168, -0.17012678730570646}},
    {0, -1, 0, 0.3, 0.7, 1.9, {2.0, -0.5}, {0.7236586176673135, 0.2915746966660449}},
    {-1, -1, 0, 0.3, 0.7, 1.9, {-2.0, 0.0}, {0.9146020839437334, 0.0}},
    {-1, -1, 0, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.9921655803342767, 0.0}},
    {-1, -1, 0, 0.3, 0.7, 1.9, {0.3, 0.0}, {0.9959972787285178, 0.0}},
    {-1, -1, 0, 0.3, 0.7, 1.9, {0.5, 0.2}, {0.9910755293435106, -0.0113380560896958}},
    {-1, -1, 0, 0.3, 0.7, 1.9, {-1.0, 1.5}, {1.0019322234841637, 0.07922444007447361}},
    {-1, -1, 0, 0.3, 0.7, 1.9, {2.0, -0.5}, {1.046844608479935, 0.25249495229092833}},
    {-1, 1, 0, 0.3, 0.7, 1.9, {-2.0, 0.0}, {2.3658131586657687, 0.0}},
    {-1, 1, 0, 0.3, 0.7, 1.9, {-0.5, 0.0}, {1.358524943580139, 0.0}},
    {-1, 1, 0, 0.3, 0.7, 1.9, {0.3, 0.0}, {0.7738912994465489, 0.0}},
    {-1, 1, 0, 0.3, 0.7, 1.9, {0.5, 0.2}, {0.6203059318023292, -0.16169017611329997}},
    {-1, 1, 0, 0.3, 0.7, 1.9, {-1.0, 1.5}, {1.7392828086115752, -1.0051901809585595}},
    {-1, 1, 0, 0.3, 0.7, 1.9, {2.0, -0.5}, {-0.4145120734990296, 0.6873620449990675}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {-2.0, 0.0}, {-1.344488838662361, 0.0}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {-0.5, 0.0}, {0.44995267097427327, 0.0}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {0.3, 0.0}, {1.3036197823269478, 0.0}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {0.5, 0.2}, {1.4989140601682365, 0.17653927063941335}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {-1.0, 1.5}, {-0.06527831258256693, 1.8213790533150573}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {2.0, -0.5}, {3.0714061837618223, 0.3302570966116376}},
};

inline constexpr ImOnCut boundary_values[] = {
    {0, 1, 1, 0.5, 0.5, 1.0, 1.5, 0.4410402457628143},
    {0, 1, 1, 0.5, 0.5, 1.0, 2.0, 0.4569465810444636},
    {0, 1, 1, 0.5, 0.5, 1.0, 5.0, 0.4002372309295243},
    {0, 1, 1, 0.3, 0.7, 1.9, 1.5, 0.22888431612705679},
    {0, 1, 1, 0.3, 0.7, 1.9, 2.0, 0.2689313224836868},
    {0, 1, 1, 0.3, 0.7, 1.9, 5.0, 0.24532721932429788},
    {0, 1, 0, 0.3, 0.7, 1.9, 1.5, 0.5782340617946697},
    {0, 1, 0, 0.3, 0.7, 1.9, 2.0, 0.45293696418305146},
    {0, 1, 0, 0.3, 0.7, 1.9, 5.0, 0.25823917823610304},
    {0, 0, 1, 0.3, 0.7, 1.9, 1.5, -0.13351585107411645},
    {0, 0, 1, 0.3, 0.7, 1.9, 2.0, -0.15687660478215062},
    {0, 0, 1, 0.3, 0.7, 1.9, 5.0, -0.14310754460584044},
    {1, 1, 0, 0.3, 0.6, 2.4, 1.5, 1.683351481827254},
    {1, 1, 0, 0.3, 0.6, 2.4, 2.0, 0.7955775169853541},
    {1, 1, 0, 0.3, 0.6, 2.4, 5.0, 0.13861592585604873},
    {0, 2, 2, 0.3, 0.7, 1.9, 1.5, 0.40046124691913415},
    {0, 2, 2, 0.3, 0.7, 1.9, 2.0, 0.41465315898785654},
    {0, 2, 2, 0.3, 0.7, 1.9, 5.0, 0.2865111099891461},
    {0, 2, 2, 2.5, 0.5, 2.0, 1.5, 5.537286060693619},
    {0, 2, 2, 2.5, 0.5, 2.0, 2.0, 4.7785480517436666e-30},
    {0, 2, 2, 2.5, 0.5, 2.0, 5.0, -0.5190580357834398},
    {-2, -2, 0, 0.3, 0.7, 1.9, 1.5, -0.48631072550321125},
    {-2, -2, 0, 0.3, 0.7, 1.9, 2.0, -0.903354037585255},
    {-2, -2, 0, 0.3, 0.7, 1.9, 5.0, -3.9962268287360585},
    {1, 1, 2, 0.3, 0.7, 1.9, 1.5, 2.3354677441853386},
    {1, 1, 2, 0.3, 0.7, 1.9, 2.0, 2.0580716484515476},
    {1, 1, 2, 0.3, 0.7, 1.9, 5.0, 0.7509738769316007},
    {0, 0, 2, 0.3, 0.7, 1.9, 1.5, -0.17148539380381855},
    {0, 0, 2, 0.3, 0.7, 1.9, 2.0, -0.22667572351826484},
    {0, 0, 2, 0.3, 0.7, 1.9, 5.0, -0.24813647332180513},
};

inline constexpr Taylor ratio_taylor_values[] = {
    {0, 1, 1, 0.5, 0.25, 1.25, {1.0, 0.17777777777777778, 0.0847863247863248, 0.05198726328138093, 0.03601461370873136, 0.026834792727522743, 0.020989823687220473, 0.016998302963487744}},
    {1, 1, 2, 0.3, 0.7, 1.9, {1.0, 0.45614035087719296, 0.2665517826196292, 0.1766814354662695, 0.12650672353259226, 0.09544941660199115, 0.07480170874561079, 0.06033365830980713}},
    {-2, -2, 0, 0.3, 0.7, 1.9, {1.0, 1.0526315789473686, -0.11634349030470913, -0.05306896048986733, -0.026603994086144923, -0.01640373254840462, -0.011258117651995763, -0.008260528913163662}},
    {0, -1, 0, 1.0, 1.0, 2.0, {1.0, -0.5, -0.08333333333333333, -0.041666666666666664, -0.02638888888888889, -0.01875, -0.014269179894179895, -0.01136739417989418}},
    {2, -1, 3, 0.4, -0.3, 1.7, {1.0, -0.5932415519399249, 0.03032988001427653, 0.008351314573154845, 0.003196575696803404, 0.001502413846167476, 0.0008130532592845381, 0.00048723560009088354}},
};

inline constexpr double quad_jacobi_cos = -8.325780468075516; // int t^0.4 (1-t)^-0.9 cos 3t
inline constexpr double quad_exp_sqrt = 2.925303491814363;   // int e^t t^-1/2

inline constexpr double identity_one = 1.4426950408889634;
inline constexpr double identity_half = 1.2331517311882159;
inline constexpr double identity_three = 2.1640425613334453;

inline constexpr double gauss_sum_03_07_19 = 1.252770901874711;

} // namespace oracle
