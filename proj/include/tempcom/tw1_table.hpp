// Generated by tools/gen_tw1_table.py (table version 1). Do not edit.
#pragma once

#include <array>
#include <cstddef>

namespace tempcom::detail {

inline constexpr int kTw1TableVersion = 1;
inline constexpr double kTw1GridMin = -10.0;
inline constexpr double kTw1GridStep = 0.01;
inline constexpr std::size_t kTw1GridSize = 1801;

inline constexpr std::array<double, kTw1GridSize> kTw1Cdf = {
    3.15954526083519e-22,
    3.6202194804143056e-22,
    4.146908457390083e-22,
    4.749201027223403e-22,
    5.43758461743084e-22,
    6.223924943192352e-22,
    7.12233202252037e-22,
    8.148292678331384e-22,
    9.319785839660714e-22,
    1.0657077723487274e-21,
    1.2182908462853656e-21,
    1.3923881423406561e-21,
    1.5909185024891065e-21,
    1.8173611659888046e-21,
    2.075485739036696e-21,
    2.3696476293634746e-21,
    2.704931978498671e-21,
    3.0868280589558476e-21,
    3.521623585650563e-21,
    4.016787375787124e-21,
    4.580411293580695e-21,
    5.221737513621025e-21,
    5.95148329711417e-21,
    6.781523080243074e-21,
    7.725230902805746e-21,
    8.798318227113428e-21,
    1.0017800460027697e-20,
    1.140321154281616e-20,
    1.2977484873203541e-20,
    1.4765119083579767e-20,
    1.679481580401764e-20,
    1.9099086578111e-20,
    2.171403864283719e-20,
    2.4680885105120006e-20,
    2.8046021131396933e-20,
    3.186200930833309e-20,
    3.618843549382664e-20,
    4.109219988645932e-20,
    4.6648680521304355e-20,
    5.2943815946232795e-20,
    6.007364247570294e-20,
    6.814678265278326e-20,
    7.728631516548837e-20,
    8.762933981343608e-20,
    9.933336136132908e-20,
    1.1257256218121294e-19,
    1.2754440898281913e-19,
    1.4447241239000865e-19,
    1.6360838564135586e-19,
    1.8523188556364697e-19,
    2.0966306604741125e-19,
    2.372602816159733e-19,
    2.6842411018889155e-19,
    3.0360553796436144e-19,
    3.433166839116261e-19,
    3.8812887591084126e-19,
    4.386853723595291e-19,
    4.957025584579448e-19,
    5.599986896508679e-19,
    6.324805827669875e-19,
    7.141729426177859e-19,
    8.062226896068964e-19,
    9.099188375695601e-19,
    1.0266966275680885e-18,
    1.1581933531190657e-18,
    1.3062199995499492e-18,
    1.4728106546208775e-18,
    1.6602416673554829e-18,
    1.8710920636383102e-18,
    2.108216104988027e-18,
    2.374817431916689e-18,
    2.6744948575341684e-18,
    3.0112720348658263e-18,
    3.3896573675339565e-18,
    3.814673885331742e-18,
    4.291964538888705e-18,
    4.827848206618569e-18,
    5.429324785950259e-18,
    6.1043251455458e-18,
    6.861607275110523e-18,
    7.711003750007346e-18,
    8.663519402694726e-18,
    9.731396493215893e-18,
    1.0928336327815616e-17,
    1.2269590872486067e-17,
    1.3772250133531958e-17,
    1.5455326650935088e-17,
    1.733999615917087e-17,
    1.944997639311513e-17,
    2.1811551229746306e-17,
    2.4454180414628192e-17,
    2.7410658179363354e-17,
    3.071729631624256e-17,
    3.441482369875327e-17,
    3.854850537381193e-17,
    4.316864547991719e-17,
    4.833138984077522e-17,
    5.409890934173414e-17,
    6.054072026302964e-17,
    6.773389610089902e-17,
    7.57643375016873e-17,
    8.47271523518062e-17,
    9.472845094536898e-17,
    1.0588592494316765e-16,
    1.1833027624182273e-16,
    1.322068976004705e-16,
    1.4767683945413433e-16,
    1.6491919356864758e-16,
    1.8413260769169768e-16,
    2.0553723643892466e-16,
    2.2937770896921055e-16,
    2.5592493995023207e-16,
    2.8547965513507e-16,
    3.1837478308007187e-16,
    3.5497933599549254e-16,
    3.9570273069332724e-16,
    4.409975568672142e-16,
    4.913658571301755e-16,
    5.473624919100433e-16,
    6.09602941529531e-16,
    6.787671384158023e-16,
    7.556077722685317e-16,
    8.409576959877288e-16,
    9.357369931758357e-16,
    1.0409639980569263e-15,
    1.1577642638367815e-15,
    1.287380714911966e-15,
    1.431186220925559e-15,
    1.590699034910637e-15,
    1.7675952504434996e-15,
    1.963723870064139e-15,
    2.1811267706654785e-15,
    2.422057929111603e-15,
    2.689003595412785e-15,
    2.9847046260898726e-15,
    3.31218778847895e-15,
    3.674785265810897e-15,
    4.0761725022432e-15,
    4.520400709561339e-15,
    5.011931640256945e-15,
    5.555680289098864e-15,
    6.157059150353706e-15,
    6.822029891920886e-15,
    7.557152686640399e-15,
    8.3696459347901e-15,
    9.267455182867506e-15,
    1.0259316718554734e-14,
    1.1354842824468445e-14,
    1.256459802581606e-14,
    1.3900197642440748e-14,
    1.5374405094141254e-14,
    1.7001246558428737e-14,
    1.8796132668410575e-14,
    2.0775979002520122e-14,
    2.2959370855427308e-14,
    2.5366699432710393e-14,
    2.8020354660360168e-14,
    3.094489738799448e-14,
    3.416727081518486e-14,
    3.7717035336900234e-14,
    4.162659241102844e-14,
    4.5931472836421954e-14,
    5.067061617322347e-14,
    5.588668729424345e-14,
    6.162644097523383e-14,
    6.79410733248343e-14,
    7.488665652189907e-14,
    8.252457996848838e-14,
    9.092202619367329e-14,
    1.0015253079860379e-13,
    1.1029655757517196e-13,
    1.2144208193560691e-13,
    1.336853487764085e-13,
    1.4713158080803322e-13,
    1.6189578177218385e-13,
    1.78103682410628e-13,
    1.9589259196349631e-13,
    2.1541257300987904e-13,
    2.3682747939508976e-13,
    2.6031622506753713e-13,
    2.860741421829821e-13,
    3.14314414083731e-13,
    3.452696775301608e-13,
    3.7919368721694215e-13,
    4.1636327113763293e-13,
    4.570802526620488e-13,
    5.016737730994227e-13,
    5.505025107711371e-13,
    6.039573634252257e-13,
    6.624642247994043e-13,
    7.264870650048397e-13,
    7.96531087551975e-13,
    8.731464168320475e-13,
    9.569318881520775e-13,
    1.0485392684493005e-12,
    1.1486777062984472e-12,
    1.2581187229534766e-12,
    1.377701375715235e-12,
    1.5083381119078079e-12,
    1.651020882643541e-12,
    1.8068278991112898e-12,
    1.9769308786065194e-12,
    2.162602692755086e-12,
    2.3652262160885816e-12,
    2.5863030799196896e-12,
    2.8274637126375574e-12,
    3.0904780478241116e-12,
    3.3772670176009426e-12,
    3.689914854232114e-12,
    4.030682715209493e-12,
    4.402023053629856e-12,
    4.806595208500293e-12,
    5.2472822151080616e-12,
    5.7272092845705384e-12,
    6.24976280680574e-12,
    6.8186120482624745e-12,
    7.437731571187569e-12,
    8.111425659870298e-12,
    8.844355098009067e-12,
    9.641565211557428e-12,
    1.0508516446161579e-11,
    1.1451117777728833e-11,
    1.2475761634940779e-11,
    1.3589361989345082e-11,
    1.4799396247852806e-11,
    1.611394816307653e-11,
    1.754175590661523e-11,
    1.909226313097055e-11,
    2.07756735853339e-11,
    2.2603009848513277e-11,
    2.4586176977722284e-11,
    2.673802999145224e-11,
    2.9072447208835384e-11,
    3.160440806614373e-11,
    3.4350077925836094e-11,
    3.732689737421131e-11,
    4.055367994261717e-11,
    4.4050714728989186e-11,
    4.7839878910226e-11,
    5.194475649913906e-11,
    5.639076571629962e-11,
    6.120529734633467e-11,
    6.641786046556264e-11,
    7.206024063176796e-11,
    7.816666747335662e-11,
    8.477399614866415e-11,
    9.192189990679337e-11,
    9.96530766294636e-11,
    1.0801347083631643e-10,
    1.170525096074845e-10,
    1.268233560499891e-10,
    1.3738317948766953e-10,
    1.4879344670705597e-10,
    1.611202283741409e-10,
    1.744345320200621e-10,
    1.888126552435861e-10,
    2.0433656039142318e-10,
    2.21094281638647e-10,
    2.391803520127635e-10,
    2.5869626303227076e-10,
    2.797509583644232e-10,
    3.02461352207049e-10,
    3.269528907888042e-10,
    3.533601465692987e-10,
    3.818274523626749e-10,
    4.125095817426151e-10,
    4.455724630906747e-10,
    4.811939580342068e-10,
    5.195646727428446e-10,
    5.608888365408342e-10,
    6.053852261723187e-10,
    6.532881594556383e-10,
    7.048485465320992e-10,
    7.603350139005178e-10,
    8.200350953652404e-10,
    8.842565014891107e-10,
    9.533284726136369e-10,
    1.027603213432327e-09,
    1.1074574201496404e-09,
    1.1932939023296242e-09,
    1.2855433094149198e-09,
    1.3846659643913124e-09,
    1.491153811866531e-09,
    1.605532481377621e-09,
    1.728363488653863e-09,
    1.8602465640329144e-09,
    2.0018221322824947e-09,
    2.153773929650363e-09,
    2.316831802754596e-09,
    2.49177465353568e-09,
    2.6794335784669824e-09,
    2.880695196623167e-09,
    3.096505164880672e-09,
    3.3278719198585578e-09,
    3.575870633571501e-09,
    3.841647401782869e-09,
    4.126423695094964e-09,
    4.431501049658072e-09,
    4.7582660592112715e-09,
    5.108195632585939e-09,
    5.482862589911163e-09,
    5.883941547832632e-09,
    6.31321516863828e-09,
    6.772580781545803e-09,
    7.2640573408057525e-09,
    7.789792826834148e-09,
    8.352072041757272e-09,
    8.95332487502489e-09,
    9.596134990485254e-09,
    1.028324905431828e-08,
    1.1017586453674675e-08,
    1.1802249550312924e-08,
    1.2640534540981366e-08,
    1.3535942879062937e-08,
    1.4492193349441512e-08,
    1.5513234811978383e-08,
    1.6603259630211855e-08,
    1.7766717848702746e-08,
    1.9008332106293924e-08,
    2.0333113427540896e-08,
    2.1746377770855882e-08,
    2.325376356559386e-08,
    2.48612501075915e-08,
    2.657517696861821e-08,
    2.840226445682753e-08,
    3.034963511762353e-08,
    3.242483638962009e-08,
    3.4635864447409615e-08,
    3.699118928576672e-08,
    3.9499781117450994e-08,
    4.217113812336693e-08,
    4.501531563355709e-08,
    4.804295684023251e-08,
    5.1265325018822935e-08,
    5.469433746518435e-08,
    5.834260110678781e-08,
    6.22234498923048e-08,
    6.635098413238871e-08,
    7.07401117403487e-08,
    7.540659158363382e-08,
    8.036707891794795e-08,
    8.56391731727461e-08,
    9.12414679540044e-08,
    9.719360363923163e-08,
    1.0351632241378022e-07,
    1.1023152606525927e-07,
    1.1736233652642964e-07,
    1.2493315936841144e-07,
    1.32969750291591e-07,
    1.414992848353114e-07,
    1.505504313604181e-07,
    1.6015342752041604e-07,
    1.703401602988999e-07,
    1.811442498306402e-07,
    1.9260113707847664e-07,
    2.0474817565648738e-07,
    2.1762472782985724e-07,
    2.3127226499703093e-07,
    2.4573447267660334e-07,
    2.6105736040816214e-07,
    2.772893765310889e-07,
    2.944815281812052e-07,
    3.126875067000188e-07,
    3.3196381867718e-07,
    3.5236992272212106e-07,
    3.739683724246771e-07,
    3.968249655198154e-07,
    4.210088996437144e-07,
    4.4659293494186975e-07,
    4.736535635921075e-07,
    5.022711868842873e-07,
    5.325302996228773e-07,
    5.645196827675835e-07,
    5.983326040158268e-07,
    6.340670270376416e-07,
    6.718258294380203e-07,
    7.117170299282539e-07,
    7.538540250306116e-07,
    7.983558354861372e-07,
    8.453473629624845e-07,
    8.949596573246796e-07,
    9.47330194685011e-07,
    1.002603167073925e-06,
    1.0609297834611392e-06,
    1.1224685831713735e-06,
    1.1873857618812757e-06,
    1.25585551033344e-06,
    1.328060366804335e-06,
    1.4041915833056894e-06,
    1.4844495060398831e-06,
    1.5690439710439073e-06,
    1.6581947148396893e-06,
    1.752131801009159e-06,
    1.851096063350613e-06,
    1.9553395656578075e-06,
    2.0651260791185353e-06,
    2.1807315777981814e-06,
    2.3024447523299544e-06,
    2.430567543426237e-06,
    2.565415694543621e-06,
    2.7073193253140544e-06,
    2.8566235258629402e-06,
    3.0136889728789744e-06,
    3.1788925680039327e-06,
    3.3526280991251574e-06,
    3.5353069255546095e-06,
    3.727358687310784e-06,
    3.929232039954668e-06,
    4.1413954148478465e-06,
    4.3643378062701866e-06,
    4.5985695858031655e-06,
    4.844623344799545e-06,
    5.103054765920323e-06,
    5.374443524432487e-06,
    5.659394219603836e-06,
    5.958537338356314e-06,
    6.27253025028625e-06,
    6.602058236373472e-06,
    6.9478355513974225e-06,
    7.310606521332013e-06,
    7.69114667679954e-06,
    8.090263922477957e-06,
    8.508799745244728e-06,
    8.94763046006168e-06,
    9.40766849581175e-06,
    9.88986372170938e-06,
    1.0395204815082893e-05,
    1.0924720672002142e-05,
    1.1479481861122741e-05,
    1.2060602122505464e-05,
    1.2669239911724667e-05,
    1.3306599991037277e-05,
    1.3973935068022235e-05,
    1.467254748332244e-05,
    1.5403790948055337e-05,
    1.6169072332442286e-05,
    1.6969853506675136e-05,
    1.7807653234765532e-05,
    1.8684049122754627e-05,
    1.960067962321252e-05,
    2.05592460947522e-05,
    2.1561514921336953e-05,
    2.260931968908479e-05,
    2.3704563423720313e-05,
    2.484922088933255e-05,
    2.6045340949202643e-05,
    2.7295048991048664e-05,
    2.8600549415918923e-05,
    2.9964128194099294e-05,
    3.138815548743724e-05,
    3.287508834018571e-05,
    3.442747343976886e-05,
    3.604794994698551e-05,
    3.7739252399511216e-05,
    3.9504213687307405e-05,
    4.13457681025852e-05,
    4.326695446489107e-05,
    4.527091932277475e-05,
    4.736092023283145e-05,
    4.9540329117385685e-05,
    5.181263570228704e-05,
    5.4181451035155705e-05,
    5.665051108585766e-05,
    5.922368042991707e-05,
    6.190495601603166e-05,
    6.469847101878718e-05,
    6.76084987772925e-05,
    7.063945682127936e-05,
    7.37959109847129e-05,
    7.70825796096089e-05,
    8.050433783806009e-05,
    8.406622199689942e-05,
    8.77734340729725e-05,
    9.163134628122765e-05,
    9.564550572667035e-05,
    9.9821639159409e-05,
    0.00010416565782559699,
    0.0001086836624135419,
    0.00011338194809588704,
    0.00011826700966864799,
    0.00012334554678810735,
    0.00012862446930493135,
    0.00013411090269731688,
    0.00013981219360269766,
    0.00014573591544879663,
    0.0001518898741839352,
    0.00015828211410768824,
    0.00016492092380136487,
    0.00017181484215863296,
    0.00017897266451649595,
    0.00018640344888667425,
    0.0001941165222876635,
    0.00020212148717648336,
    0.00021042822798081286,
    0.000219046917731149,
    0.00022798802479267815,
    0.00023726231969554802,
    0.0002468808820648298,
    0.0002568551076487892,
    0.0002671967154436762,
    0.0002779177549170548,
    0.00028903061332599336,
    0.00030054802313134133,
    0.0003124830695065015,
    0.00032484919793897147,
    0.00033766022192549067,
    0.00035093033075588975,
    0.00036467409739010515,
    0.000378906486419824,
    0.00039364286212030774,
    0.0004088989965857214,
    0.0004246910779482232,
    0.00044103571867935105,
    0.00045794996397152633,
    0.0004754513001962906,
    0.0004935576634399942,
    0.0005122874481119638,
    0.0005316595156241423,
    0.0005516932031401451,
    0.0005724083323897883,
    0.000593825218548014,
    0.0006159646791741509,
    0.0006388480432098225,
    0.0006624971600309617,
    0.0006869344085528156,
    0.0007121827063822845,
    0.0007382655190174514,
    0.000765206869086352,
    0.0007930313456270661,
    0.0008217641133996878,
    0.0008514309222307396,
    0.0008820581163837301,
    0.0009136726439521663,
    0.000946302066272632,
    0.0009799745673496737,
    0.0010147189632931431,
    0.0010505647117586806,
    0.0010875419213906934,
    0.0011256813612596469,
    0.001165014470291883,
    0.0012055733666842146,
    0.001247390857299846,
    0.0012905004470401824,
    0.0013349363481871123,
    0.0013807334897089566,
    0.0014279275265278177,
    0.0014765548487379616,
    0.00152665259077444,
    0.0015782586405219186,
    0.0016314116483603146,
    0.0016861510361399104,
    0.0017425170060808755,
    0.0018005505495882702,
    0.0018602934559801554,
    0.0019217883211190062,
    0.001985078555941024,
    0.0020502083948770993,
    0.002117222904157363,
    0.002186167989994768,
    0.002257090406638143,
    0.0023300377642894473,
    0.0024050585368776494,
    0.00248220206968195,
    0.0025615185867987472,
    0.0026430591984399074,
    0.002726875908064228,
    0.0028130216193244188,
    0.002901550142829848,
    0.0029925162027139756,
    0.003085975442999436,
    0.003181984433754693,
    0.003280600677031563,
    0.0033818826125805246,
    0.0034858896233313794,
    0.0035926820406360998,
    0.0037023211492612884,
    0.0038148691921284575,
    0.003930389374788551,
    0.004048945869626983,
    0.004170603819791556,
    0.004295429342831335,
    0.004423489534045199,
    0.004554852469527083,
    0.0046895872089027105,
    0.004827763797751105,
    0.004969453269700839,
    0.005114727648196376,
    0.005263659947924152,
    0.005416324175894262,
    0.005572795332167569,
    0.005733149410223366,
    0.005897463396958755,
    0.00606581527231357,
    0.006238284008513342,
    0.006414949568924886,
    0.006595892906515444,
    0.00678119596191064,
    0.006970941661043625,
    0.0071652139123906475,
    0.007364097603783823,
    0.007567678598798027,
    0.007776043732703715,
    0.007989280807981527,
    0.008207478589391802,
    0.008430726798593122,
    0.008659116108306717,
    0.008892738136018095,
    0.009131685437214224,
    0.00937605149814925,
    0.009625930728135721,
    0.009881418451353884,
    0.010142610898179335,
    0.010409605196020983,
    0.01068249935966732,
    0.010961392281136566,
    0.011246383719029878,
    0.011537574287378482,
    0.011835065443990336,
    0.012138959478284314,
    0.012449359498618176,
    0.012766369419101654,
    0.013090093945895068,
    0.013420638562993827,
    0.01375810951749282,
    0.014102613804334488,
    0.01445425915053556,
    0.014813153998894352,
    0.015179407491178814,
    0.01555312945079083,
    0.015934430364914487,
    0.016323421366141056,
    0.01672021421357664,
    0.017124921273433198,
    0.01753765549910041,
    0.017958530410706313,
    0.01838766007416238,
    0.018825159079700827,
    0.019271142519902987,
    0.019725725967223932,
    0.02018902545101603,
    0.020661157434053314,
    0.021142238788564874,
    0.021632386771776237,
    0.022131719000967207,
    0.022640353428049997,
    0.023158408313670987,
    0.023686002200845047,
    0.02422325388812493,
    0.02477028240231488,
    0.025327206970730723,
    0.025894146993019795,
    0.026471222012540322,
    0.027058551687313342,
    0.027656255760551026,
    0.02826445403077428,
    0.028883266321521557,
    0.02951281245066276,
    0.030153212199324573,
    0.030804585280438196,
    0.03146705130691662,
    0.03214072975947397,
    0.03282573995409549,
    0.033522201009168195,
    0.034230231812284524,
    0.034949950986729206,
    0.03568147685765918,
    0.03642492741799108,
    0.03718042029400505,
    0.03794807271067896,
    0.03872800145676482,
    0.03952032284961865,
    0.04032515269979967,
    0.04114260627544788,
    0.04197279826645669,
    0.04281584274845204,
    0.04367185314659232,
    0.04454094219920451,
    0.04542322192126679,
    0.04631880356775534,
    0.04722779759687088,
    0.04815031363315408,
    0.04908646043051037,
    0.05003634583515707,
    0.05100007674850611,
    0.051977759090001956,
    0.05296949775992621,
    0.05397539660218476,
    0.05499555836709819,
    0.05603008467420326,
    0.05707907597508827,
    0.05814263151627433,
    0.05922084930216101,
    0.060313826058050565,
    0.06142165719326888,
    0.06254443676439683,
    0.06368225743863265,
    0.06483521045729584,
    0.06600338559949663,
    0.06718687114597816,
    0.06838575384315654,
    0.06960011886737053,
    0.07083004978935731,
    0.07207562853897341,
    0.07333693537017254,
    0.0746140488262636,
    0.07590704570545873,
    0.07721600102672985,
    0.0785409879959906,
    0.07988207797262128,
    0.08123934043634667,
    0.08261284295449048,
    0.08400265114961677,
    0.08540882866757529,
    0.08683143714596947,
    0.08827053618305555,
    0.08972618330709448,
    0.09119843394617115,
    0.09268734139849119,
    0.0941929568031743,
    0.09571532911155814,
    0.09725450505902486,
    0.0988105291373685,
    0.10038344356771324,
    0.10197328827399585,
    0.10358010085703309,
    0.10520391656917603,
    0.10684476828957452,
    0.10850268650005936,
    0.11017769926165286,
    0.11186983219172744,
    0.11357910844181779,
    0.11530554867609623,
    0.11704917105053333,
    0.118809991192743,
    0.12058802218253031,
    0.12238327453314775,
    0.12419575617327502,
    0.12602547242972767,
    0.12787242601090665,
    0.12973661699099706,
    0.13161804279492462,
    0.13351669818407882,
    0.13543257524281074,
    0.13736566336571474,
    0.13931594924569662,
    0.14128341686284085,
    0.14326804747408114,
    0.14526981960368057,
    0.14728870903452587,
    0.14932468880024377,
    0.15137772917814482,
    0.1534477976829948,
    0.1555348590616244,
    0.15763887528837667,
    0.1597598055613957,
    0.16189760629976538,
    0.16405223114149123,
    0.16622363094233658,
    0.1684117537755116,
    0.1706165449322151,
    0.17283794692303248,
    0.17507589948018937,
    0.17733033956066369,
    0.17960120135015267,
    0.18188841626789448,
    0.18419191297234788,
    0.18651161736772462,
    0.18884745261137253,
    0.19119933912201084,
    0.19356719458881164,
    0.19595093398132607,
    0.19835046956025387,
    0.2007657108890478,
    0.20319656484635443,
    0.2056429356392817,
    0.20810472481749448,
    0.21058183128812683,
    0.21307415133150792,
    0.215581578617697,
    0.21810400422382142,
    0.2206413166522061,
    0.2231934018492935,
    0.22576014322534324,
    0.22834142167490432,
    0.23093711559805655,
    0.23354710092239872,
    0.23617125112579468,
    0.2388094372598542,
    0.2414615279741403,
    0.24412738954110222,
    0.24680688588171285,
    0.2494998785918087,
    0.25220622696911815,
    0.2549257880409672,
    0.2576584165926528,
    0.2604039651964703,
    0.2631622842413872,
    0.265933221963348,
    0.2687166244761963,
    0.27151233580320705,
    0.27432019790921247,
    0.2771400507333123,
    0.2799717322221457,
    0.28281507836372605,
    0.28566992322181417,
    0.2885360989708186,
    0.2914134359312135,
    0.2943017626054523,
    0.29720090571437124,
    0.30011069023406,
    0.30303093943319415,
    0.3059614749108038,
    0.30890211663447575,
    0.31185268297896107,
    0.3148129907651869,
    0.3177828552996422,
    0.3207620904141369,
    0.32375050850590975,
    0.32674792057806784,
    0.3297541362803508,
    0.33276896395020034,
    0.335792210654109,
    0.33882368222925574,
    0.3418631833253845,
    0.34491051744693374,
    0.3479654869953844,
    0.3510278933118219,
    0.35409753671968847,
    0.35717421656771225,
    0.3602577312730011,
    0.3633478783642758,
    0.3664444545252417,
    0.36954725563806473,
    0.3726560768269518,
    0.37577071250180777,
    0.3788909564019644,
    0.38201660163995604,
    0.3851474407453317,
    0.38828326570848465,
    0.39142386802448886,
    0.39456903873692245,
    0.39771856848166615,
    0.4008722475306563,
    0.404029865835584,
    0.4071912130715219,
    0.41035607868046475,
    0.4135242519147671,
    0.4166955218804652,
    0.41986967758047267,
    0.42304650795762483,
    0.4262258019375712,
    0.42940734847149015,
    0.43259093657861936,
    0.4357763553885877,
    0.438963394183532,
    0.442151842439985,
    0.44534148987053046,
    0.4485321264651968,
    0.4517235425325936,
    0.45491552874076513,
    0.4581078761577561,
    0.4613003762918738,
    0.4644928211316386,
    0.4676850031854069,
    0.4708767155206586,
    0.47406775180293675,
    0.47725790633442405,
    0.4804469740921572,
    0.48363475076585355,
    0.48682103279534983,
    0.4900056174076458,
    0.49318830265352476,
    0.4963688874437688,
    0.4995471715849378,
    0.5027229558147057,
    0.5058960418367613,
    0.5090662323552448,
    0.5122333311087238,
    0.5153971429036976,
    0.5185574736476216,
    0.5217141303814455,
    0.5248669213116565,
    0.5280156558418242,
    0.5311601446036326,
    0.534300199487404,
    0.5374356336720968,
    0.5405662616547818,
    0.543691899279585,
    0.5468123637660887,
    0.5499274737371996,
    0.5530370492464622,
    0.5561409118048187,
    0.5592388844068237,
    0.5623307915562833,
    0.5654164592913441,
    0.5684957152090065,
    0.5715683884890664,
    0.5746343099174894,
    0.5776933119092036,
    0.5807452285303115,
    0.583789895519725,
    0.586827150310213,
    0.5898568320488664,
    0.5928787816169749,
    0.5958928416493114,
    0.5988988565528368,
    0.6018966725248043,
    0.6048861375702823,
    0.6078671015190784,
    0.6108394160420748,
    0.6138029346669774,
    0.6167575127934676,
    0.619703007707768,
    0.6226392785966158,
    0.6255661865606542,
    0.6284835946272267,
    0.631391367762597,
    0.6342893728835758,
    0.6371774788685725,
    0.6400555565680607,
    0.6429234788144725,
    0.6457811204315105,
    0.6486283582428947,
    0.6514650710805325,
    0.6542911397921285,
    0.6571064472482233,
    0.6599108783486817,
    0.6627043200286148,
    0.6654866612637544,
    0.6682577930752804,
    0.6710176085340959,
    0.6737660027645674,
    0.6765028729477324,
    0.6792281183239611,
    0.681941640195108,
    0.6846433419261286,
    0.6873331289461866,
    0.6900109087492402,
    0.6926765908941344,
    0.6953300870041761,
    0.6979713107662241,
    0.7006001779292864,
    0.7032166063026299,
    0.7058205157534101,
    0.7084118282038296,
    0.7109904676278332,
    0.7135563600473332,
    0.716109433527987,
    0.7186496181745231,
    0.7211768461256234,
    0.7236910515483748,
    0.7261921706322867,
    0.7286801415828861,
    0.7311549046149005,
    0.7336164019450299,
    0.7360645777843133,
    0.7384993783301049,
    0.7409207517576587,
    0.7433286482113322,
    0.745723019795416,
    0.7481038205645968,
    0.7504710065140558,
    0.7528245355692242,
    0.7551643675751769,
    0.7574904642857057,
    0.7598027893520474,
    0.7621013083112926,
    0.764385988574479,
    0.7666567994143746,
    0.7689137119529547,
    0.7711566991485932,
    0.773385735782952,
    0.7756007984476084,
    0.7778018655303934,
    0.7799889172014748,
    0.782161935399176,
    0.7843209038155482,
    0.7864658078817012,
    0.7885966347528857,
    0.7907133732933656,
    0.7928160140610488,
    0.7949045492919224,
    0.7969789728842659,
    0.7990392803826738,
    0.801085468961878,
    0.8031175374103908,
    0.805135486113969,
    0.8071393170389002,
    0.8091290337151302,
    0.8111046412192324,
    0.813066146157226,
    0.8150135566472456,
    0.8169468823020845,
    0.8188661342115959,
    0.8207713249249798,
    0.8226624684329481,
    0.8245395801497813,
    0.8264026768952795,
    0.8282517768766231,
    0.8300868996701308,
    0.831908066202947,
    0.8337152987346406,
    0.8355086208387327,
    0.837288057384172,
    0.8390536345167297,
    0.8408053796403567,
    0.8425433213984896,
    0.8442674896553087,
    0.8459779154769714,
    0.8476746311128044,
    0.8493576699764774,
    0.8510270666271597,
    0.8526828567506568,
    0.8543250771405451,
    0.8559537656792992,
    0.8575689613194285,
    0.859170704064613,
    0.860759034950861,
    0.8623339960276756,
    0.8638956303392524,
    0.8654439819056988,
    0.8669790957042911,
    0.8685010176507627,
    0.8700097945806373,
    0.8715054742306143,
    0.8729881052199904,
    0.8744577370321486,
    0.875914419996106,
    0.8773582052681153,
    0.878789144813343,
    0.8802072913876183,
    0.8816126985192504,
    0.8830054204909358,
    0.8843855123217365,
    0.8857530297491569,
    0.8871080292112967,
    0.8884505678291178,
    0.8897807033887807,
    0.8910984943241099,
    0.8924039996991405,
    0.8936972791907831,
    0.8949783930715955,
    0.8962474021926666,
    0.8975043679666135,
    0.8987493523507049,
    0.8999824178300933,
    0.9012036274011801,
    0.9024130445551052,
    0.903610733261362,
    0.904796757951545,
    0.9059711835032309,
    0.9071340752239966,
    0.9082854988355703,
    0.9094255204581283,
    0.9105542065947243,
    0.9116716241158748,
    0.912777840244277,
    0.9138729225396816,
    0.9149569388839136,
    0.91602995746604,
    0.9170920467676901,
    0.9181432755485305,
    0.919183712831897,
    0.9202134278905747,
    0.9212324902327429,
    0.9222409695880739,
    0.9232389358939943,
    0.9242264592821021,
    0.9252036100647486,
    0.9261704587217834,
    0.927127075887458,
    0.9280735323374948,
    0.9290098989763262,
    0.9299362468244876,
    0.9308526470061882,
    0.9317591707370376,
    0.9326558893119441,
    0.9335428740931812,
    0.9344201964986159,
    0.9352879279901118,
    0.9361461400620907,
    0.9369949042302739,
    0.9378342920205777,
    0.9386643749581897,
    0.9394852245568063,
    0.940296912308036,
    0.941099509670978,
    0.9418930880619616,
    0.9426777188444591,
    0.943453473319158,
    0.9442204227142095,
    0.9449786381756345,
    0.9457281907579063,
    0.9464691514146871,
    0.9472015909897378,
    0.9479255802079921,
    0.9486411896667912,
    0.9493484898272861,
    0.9500475510059989,
    0.9507384433665518,
    0.9514212369115487,
    0.9520960014746324,
    0.9527628067126837,
    0.9534217220981963,
    0.9540728169117989,
    0.9547161602349408,
    0.9553518209427327,
    0.9559798676969429,
    0.9566003689391451,
    0.9572133928840303,
    0.9578190075128566,
    0.9584172805670643,
    0.9590082795420334,
    0.9595920716809943,
    0.9601687239690849,
    0.9607383031275567,
    0.961300875608128,
    0.961856507587477,
    0.9624052649618827,
    0.9629472133420116,
    0.9634824180478367,
    0.9640109441037059,
    0.9645328562335421,
    0.9650482188561836,
    0.9655570960808626,
    0.9660595517028139,
    0.9665556491990223,
    0.967045451724097,
    0.967529022106282,
    0.96800642284359,
    0.9684777161000698,
    0.9689429637021973,
    0.9694022271353918,
    0.9698555675406568,
    0.9703030457113431,
    0.9707447220900323,
    0.971180656765542,
    0.9716109094700428,
    0.9720355395763015,
    0.9724546060950309,
    0.9728681676723543,
    0.9732762825873921,
    0.9736790087499422,
    0.9740764036982842,
    0.9744685245970853,
    0.9748554282354114,
    0.975237171024846,
    0.9756138089977114,
    0.9759853978053895,
    0.976351992716748,
    0.9767136486166601,
    0.9770704200046231,
    0.977422360993477,
    0.9777695253082109,
    0.9781119662848685,
    0.9784497368695393,
    0.9787828896174454,
    0.9791114766921132,
    0.9794355498646328,
    0.9797551605130062,
    0.9800703596215739,
    0.9803811977805276,
    0.9806877251855061,
    0.9809899916372701,
    0.9812880465414497,
    0.9815819389083781,
    0.9818717173529948,
    0.9821574300948239,
    0.9824391249580273,
    0.9827168493715296,
    0.9829906503692085,
    0.9832605745901565,
    0.9835266682790162,
    0.9837889772863685,
    0.984047547069197,
    0.9843024226914112,
    0.9845536488244291,
    0.984801269747825,
    0.9850453293500362,
    0.9852858711291242,
    0.9855229381935958,
    0.9857565732632767,
    0.985986818670243,
    0.9862137163598045,
    0.9864373078915374,
    0.9866576344403706,
    0.9868747367977186,
    0.9870886553726635,
    0.9872994301931856,
    0.9875071009074377,
    0.9877117067850614,
    0.9879132867185534,
    0.9881118792246691,
    0.9883075224458664,
    0.9885002541517941,
    0.9886901117408142,
    0.9888771322415648,
    0.989061352314559,
    0.989242808253821,
    0.9894215359885499,
    0.9895975710848265,
    0.9897709487473468,
    0.9899417038211885,
    0.9901098707936031,
    0.990275483795851,
    0.9904385766050462,
    0.9905991826460401,
    0.9907573349933362,
    0.990913066373014,
    0.9910664091646932,
    0.991217395403514,
    0.991366056782141,
    0.9915124246527918,
    0.991656530029282,
    0.9917984035890942,
    0.9919380756754625,
    0.9920755762994814,
    0.9922109351422262,
    0.9923441815568922,
    0.9924753445709538,
    0.9926044528883308,
    0.9927315348915743,
    0.9928566186440699,
    0.9929797318922443,
    0.993100902067792,
    0.9932201562899095,
    0.9933375213675425,
    0.9934530238016406,
    0.9935666897874226,
    0.9936785452166527,
    0.9937886156799203,
    0.9938969264689306,
    0.9940035025787993,
    0.9941083687103567,
    0.9942115492724536,
    0.9943130683842759,
    0.994412949877657,
    0.9945112172994028,
    0.9946078939136119,
    0.9947030027040046,
    0.9947965663762471,
    0.9948886073602838,
    0.9949791478126677,
    0.9950682096188881,
    0.9951558143957067,
    0.9952419834934808,
    0.9953267379984975,
    0.9954100987353012,
    0.9954920862690155,
    0.9955727209076697,
    0.9956520227045174,
    0.9957300114603553,
    0.9958067067258324,
    0.9958821278037632,
    0.995956293751432,
    0.9960292233828875,
    0.9961009352712462,
    0.9961714477509719,
    0.9962407789201652,
    0.9963089466428333,
    0.9963759685511671,
    0.9964418620477982,
    0.9965066443080555,
    0.9965703322822144,
    0.9966329426977337,
    0.9966944920614886,
    0.9967549966619912,
    0.9968144725716103,
    0.9968729356487672,
    0.9969304015401376,
    0.9969868856828366,
    0.9970424033065884,
    0.9970969694359029,
    0.9971505988922218,
    0.9972033062960654,
    0.997255106069169,
    0.9973060124366054,
    0.9973560394288935,
    0.997405200884103,
    0.9974535104499388,
    0.9975009815858225,
    0.9975476275649544,
    0.9975934614763676,
    0.9976384962269669,
    0.9976827445435625,
    0.9977262189748782,
    0.997768931893561,
    0.9978108954981658,
    0.9978521218151414,
    0.9978926227007814,
    0.9979324098431901,
    0.9979714947642072,
    0.9980098888213402,
    0.9980476032096744,
    0.9980846489637658,
    0.9981210369595308,
    0.9981567779161094,
    0.998191882397726,
    0.9982263608155321,
    0.998260223429427,
    0.9982934803498801,
    0.9983261415397298,
    0.9983582168159624,
    0.9983897158514912,
    0.9984206481769107,
    0.9984510231822393,
    0.9984808501186492,
    0.9985101381001772,
    0.9985388961054324,
    0.9985671329792748,
    0.9985948574344856,
    0.9986220780534315,
    0.9986488032897002,
    0.9986750414697313,
    0.9987008007944268,
    0.998726089340754,
    0.9987509150633282,
    0.9987752857959811,
    0.9987992092533178,
    0.9988226930322593,
    0.9988457446135682,
    0.9988683713633595,
    0.9988905805345997,
    0.9989123792685937,
    0.9989337745964464,
    0.9989547734405302,
    0.9989753826159102,
    0.9989956088317833,
    0.9990154586928864,
    0.9990349387008941,
    0.9990540552558038,
    0.9990728146573046,
    0.999091223106137,
    0.9991092867054315,
    0.9991270114620382,
    0.9991444032878424,
    0.9991614680010632,
    0.9991782113275435,
    0.9991946389020196,
    0.999210756269387,
    0.999226568885939,
    0.9992420821206028,
    0.9992573012561647,
    0.9992722314904654,
    0.9992868779375996,
    0.9993012456290953,
    0.9993153395150779,
    0.9993291644654263,
    0.9993427252709096,
    0.9993560266443162,
    0.9993690732215722,
    0.9993818695628379,
    0.9993944201535994,
    0.9994067294057447,
    0.9994188016586303,
    0.9994306411801275,
    0.9994422521676688,
    0.9994536387492694,
    0.9994648049845435,
    0.9994757548657116,
    0.9994864923185832,
    0.9994970212035426,
    0.9995073453165144,
    0.9995174683899168,
    0.9995273940936076,
    0.9995371260358156,
    0.999546667764061,
    0.9995560227660661,
    0.9995651944706524,
    0.9995741862486275,
    0.9995830014136591,
    0.9995916432231448,
    0.9996001148790622,
    0.9996084195288107,
    0.999616560266048,
    0.9996245401315085,
    0.9996323621138156,
    0.9996400291502822,
    0.9996475441277021,
    0.9996549098831272,
    0.99966212920464,
    0.9996692048321146,
    0.9996761394579613,
    0.9996829357278704,
    0.9996895962415441,
    0.9996961235534125,
    0.9997025201733455,
    0.9997087885673586,
    0.9997149311582965,
    0.9997209503265244,
    0.9997268484105929,
    0.9997326277079113,
    0.9997382904753944,
    0.9997438389301125,
    0.999749275249928,
    0.9997546015741249,
    0.9997598200040265,
    0.9997649326036093,
    0.9997699414001023,
    0.9997748483845836,
    0.9997796555125665,
    0.9997843647045757,
    0.9997889778467186,
    0.9997934967912436,
    0.9997979233570968,
    0.9998022593304664,
    0.9998065064653225,
    0.9998106664839429,
    0.9998147410774388,
    0.9998187319062696,
    0.9998226406007477,
    0.9998264687615459,
    0.9998302179601781,
    0.9998338897394966,
    0.9998374856141656,
    0.9998410070711314,
    0.9998444555700912,
    0.9998478325439447,
    0.9998511393992519,
    0.9998543775166735,
    0.999857548251407,
    0.9998606529336223,
    0.9998636928688824,
    0.9998666693385642,
    0.999869583600267,
    0.9998724368882246,
    0.9998752304136967,
    0.999877965365368,
    0.9998806429097341,
    0.9998832641914833,
    0.9998858303338706,
    0.9998883424390913,
    0.9998908015886409,
    0.9998932088436775,
    0.9998955652453736,
    0.9998978718152597,
    0.9999001295555741,
    0.9999023394495942,
    0.9999045024619679,
    0.9999066195390451,
    0.9999086916091923,
    0.9999107195831134,
    0.999912704354159,
    0.9999146467986336,
    0.9999165477760947,
    0.999918408129652,
    0.9999202286862607,
    0.9999220102570017,
    0.9999237536373718,
    0.9999254596075575,
    0.9999271289327109,
    0.9999287623632167,
    0.9999303606349573,
    0.9999319244695758,
    0.9999334545747274,
    0.999934951644338,
    0.9999364163588457,
    0.999937849385449,
    0.9999392513783437,
    0.9999406229789618,
    0.9999419648162016,
    0.9999432775066555,
    0.9999445616548367,
    0.9999458178533964,
    0.9999470466833463,
    0.9999482487142659,
    0.9999494245045144,
    0.9999505746014395,
    0.9999516995415786,
    0.9999527998508568,
    0.9999538760447846,
    0.9999549286286499,
    0.9999559580977095,
    0.9999569649373735,
    0.9999579496233867,
    0.9999589126220128,
    0.9999598543902086,
    0.9999607753757999,
    0.9999616760176477,
    0.9999625567458232,
    0.9999634179817677,
    0.9999642601384554,
    0.999965083620557,
    0.9999658888245901,
    0.9999666761390767,
    0.999967445944697,
    0.999968198614433,
    0.9999689345137167,
    0.9999696540005738,
    0.9999703574257665,
    0.9999710451329271,
    0.9999717174586998,
    0.9999723747328705,
    0.9999730172784999,
    0.9999736454120497,
    0.9999742594435165,
    0.9999748596765468,
    0.9999754464085645,
    0.9999760199308921,
    0.9999765805288677,
    0.999977128481956,
    0.9999776640638686,
    0.999978187542673,
    0.999978699180902,
    0.9999791992356638,
    0.9999796879587408,
    0.9999801655967043,
    0.9999806323910069,
    0.9999810885780872,
    0.9999815343894687,
    0.9999819700518527,
    0.9999823957872171,
    0.9999828118129066,
    0.9999832183417245,
    0.9999836155820249,
    0.9999840037377966,
    0.9999843830087526,
    0.9999847535904125,
    0.9999851156741891,
    0.999985469447467,
    0.999985815093683,
    0.9999861527924067,
    0.9999864827194158,
    0.9999868050467726,
    0.9999871199428992,
    0.9999874275726498,
    0.9999877280973801,
    0.9999880216750221,
    0.9999883084601495,
    0.9999885886040465,
    0.9999888622547742,
    0.9999891295572361,
    0.9999893906532388,
    0.999989645681562,
    0.9999898947780119,
    0.9999901380754853,
    0.9999903757040305,
    0.9999906077909009,
    0.9999908344606163,
    0.9999910558350155,
    0.9999912720333113,
    0.9999914831721494,
    0.9999916893656512,
    0.9999918907254776,
    0.9999920873608673,
    0.9999922793786963,
    0.9999924668835225,
    0.9999926499776335,
    0.9999928287610933,
    0.999993003331789,
    0.9999931737854764,
    0.9999933402158223,
    0.9999935027144512,
    0.9999936613709839,
    0.9999938162730805,
    0.9999939675064822,
    0.9999941151550522,
    0.9999942593008118,
    0.9999944000239799,
    0.9999945374030137,
    0.9999946715146422,
    0.9999948024339028,
    0.9999949302341793,
    0.9999950549872326,
    0.9999951767632402,
    0.9999952956308259,
    0.9999954116570912,
    0.9999955249076525,
    0.9999956354466677,
    0.9999957433368725,
    0.9999958486396009,
    0.9999959514148277,
    0.9999960517211882,
    0.9999961496160082,
    0.9999962451553356,
    0.9999963383939641,
    0.9999964293854615,
    0.9999965181821953,
    0.999996604835359,
    0.9999966893949951,
    0.999996771910025,
    0.999996852428268,
    0.9999969309964648,
    0.9999970076603063,
    0.9999970824644511,
    0.9999971554525474,
    0.9999972266672599,
    0.9999972961502857,
    0.9999973639423789,
    0.9999974300833679,
    0.999997494612179,
    0.999997557566852,
    0.9999976189845657,
    0.9999976789016475,
    0.9999977373536009,
    0.9999977943751184,
    0.9999978500001001,
    0.9999979042616725,
    0.9999979571922032,
    0.9999980088233212,
    0.999998059185927,
    0.9999981083102156,
    0.9999981562256862,
    0.9999982029611616,
    0.9999982485448012,
    0.9999982930041149,
    0.9999983363659812,
    0.9999983786566552,
    0.9999984199017874,
    0.999998460126436,
    0.9999984993550783,
    0.9999985376116249,
    0.9999985749194332,
    0.9999986113013162,
    0.9999986467795611,
    0.9999986813759323,
    0.9999987151116909,
    0.9999987480076038,
    0.9999987800839492,
    0.999998811360537,
    0.9999988418567126,
    0.9999988715913686,
    0.9999989005829568,
    0.999998928849495,
    0.9999989564085814,
    0.9999989832773979,
    0.9999990094727265,
    0.9999990350109516,
    0.9999990599080749,
    0.9999990841797196,
    0.999999107841141,
    0.9999991309072342,
    0.9999991533925439,
    0.9999991753112696,
    0.999999196677275,
    0.9999992175040966,
    0.9999992378049503,
    0.9999992575927366,
    0.9999992768800509,
    0.9999992956791899,
    0.9999993140021586,
    0.9999993318606728,
    0.9999993492661732,
    0.9999993662298243,
    0.9999993827625272,
    0.9999993988749208,
    0.9999994145773895,
    0.9999994298800692,
    0.9999994447928542,
    0.9999994593254015,
    0.999999473487135,
    0.9999994872872541,
    0.9999995007347352,
    0.9999995138383404,
    0.9999995266066195,
    0.9999995390479177,
    0.9999995511703775,
    0.9999995629819454,
    0.9999995744903774,
    0.9999995857032394,
    0.9999995966279154,
    0.9999996072716107,
    0.9999996176413568,
    0.9999996277440127,
    0.9999996375862712,
    0.9999996471746639,
    0.9999996565155621,
    0.9999996656151817,
    0.9999996744795895,
    0.9999996831147019,
    0.9999996915262915,
    0.9999996997199909,
    0.999999707701293,
    0.999999715475559,
    0.9999997230480168,
    0.9999997304237653,
    0.9999997376077818,
    0.999999744604918,
    0.9999997514199083,
    0.999999758057369,
    0.9999997645218056,
    0.9999997708176094,
    0.9999997769490659,
    0.9999997829203532,
    0.9999997887355467,
    0.9999997943986225,
    0.9999997999134558,
    0.9999998052838277,
    0.9999998105134255,
    0.9999998156058436,
    0.99999982056459,
    0.9999998253930826,
    0.9999998300946562,
    0.9999998346725617,
    0.9999998391299704,
    0.999999843469972,
    0.9999998476955825,
    0.9999998518097396,
    0.9999998558153103,
    0.9999998597150871,
    0.9999998635117954,
    0.9999998672080902,
    0.9999998708065608,
    0.999999874309733,
    0.9999998777200665,
    0.999999881039962,
    0.9999998842717569,
    0.9999998874177323,
    0.9999998904801105,
    0.9999998934610581,
    0.9999998963626885,
    0.9999998991870591,
    0.9999999019361772,
    0.9999999046119985,
    0.9999999072164302,
    0.9999999097513308,
    0.9999999122185107,
    0.9999999146197363,
    0.999999916956727,
    0.9999999192311603,
    0.9999999214446713,
    0.9999999235988511,
    0.9999999256952532,
    0.9999999277353893,
    0.9999999297207335,
    0.9999999316527229,
    0.9999999335327567,
    0.9999999353621997,
    0.9999999371423807,
    0.9999999388745947,
    0.9999999405601036,
    0.9999999422001374,
    0.9999999437958933,
    0.9999999453485398,
    0.999999946859214,
    0.9999999483290232,
    0.9999999497590482,
    0.9999999511503399,
    0.9999999525039237,
    0.999999953820798,
    0.9999999551019344,
    0.9999999563482818,
    0.9999999575607617,
    0.9999999587402737,
    0.9999999598876943,
    0.9999999610038761,
    0.99999996208965,
    0.9999999631458261,
    0.9999999641731918,
    0.9999999651725159,
    0.9999999661445464,
    0.9999999670900119,
    0.9999999680096212,
    0.9999999689040665,
    0.9999999697740207,
    0.9999999706201391,
    0.9999999714430599,
    0.999999972243405,
    0.9999999730217806,
    0.9999999737787751,
    0.9999999745149636,
    0.999999975230905,
    0.9999999759271437,
    0.9999999766042104,
    0.9999999772626211,
    0.9999999779028783,
    0.999999978525472,
    0.9999999791308779,
    0.9999999797195611,
    0.999999980291973,
    0.9999999808485533,
    0.9999999813897302,
    0.9999999819159215,
    0.9999999824275326,
    0.9999999829249593,
    0.9999999834085851,
    0.999999983878786,
    0.9999999843359267,
    0.9999999847803606,
    0.9999999852124344,
    0.9999999856324846,
    0.9999999860408384,
    0.999999986437814,
    0.9999999868237227,
    0.9999999871988657,
    0.9999999875635375,
    0.9999999879180237,
    0.9999999882626026,
    0.9999999885975459,
    0.9999999889231175,
    0.9999999892395733,
    0.9999999895471636,
    0.9999999898461318,
    0.9999999901367138,
    0.9999999904191404,
    0.999999990693636,
    0.9999999909604183,
    0.9999999912196993,
    0.9999999914716863,
    0.9999999917165797,
    0.9999999919545753
};

}  // namespace tempcom::detail
