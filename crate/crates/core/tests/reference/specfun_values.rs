// Reference values from a 30-digit evaluation.
pub const AIRY: &[(f64, f64)] = &[
    (-20.0, -0.1764061270779847),
    (-15.3, 0.04531427266427469),
    (-10.0, 0.04024123848644319),
    (-7.5, 0.3217757163806479),
    (-5.0, 0.35076100902411433),
    (-3.5, -0.37553382314043193),
    (-3.0001, -0.37884574637214496),
    (-2.9999, -0.3787828296187424),
    (-2.5, -0.11232506769296609),
    (-1.0, 0.5355608832923521),
    (-0.3, 0.43090309528558085),
    (0.4, 0.2547423542956763),
    (1.0, 0.13529241631288141),
    (1.9999, 0.03492943981097092),
    (2.0001, 0.03491882173406043),
    (2.7, 0.011198535451065878),
    (4.0, 0.0009515638512048018),
    (6.3, 4.672260820574289e-06),
    (10.0, 1.1047532552898686e-10),
    (15.0, 2.1649625207379925e-18),
    (20.0, 1.6916728686705404e-27),
    (35.0, 1.2981999731218427e-61),
    (60.0, 2.7831487094969354e-136),
    (99.0, 5.673552384334715e-287),
    (-40.0, -0.04593392343795725),
    (-120.0, -0.10139729484759988),
    (-1000.0, 0.05597189577301992),
    (-20000.0, -0.018490642668563352),
];

pub const BESSEL: &[(f64, f64, f64)] = &[
    (-0.75, 0.05, 4.375997799125413),
    (-0.75, 0.7, 0.3234194153093163),
    (-0.75, 1.0, 0.04470111581450463),
    (-0.75, 3.3, -0.3656847349500641),
    (-0.75, 7.9, -0.12576028518235619),
    (-0.75, 11.99, 0.22719950282327145),
    (-0.75, 12.01, 0.22774619354909073),
    (-0.75, 17.5, 0.11129225355631316),
    (-0.75, 24.9, 0.15771281568540718),
    (-0.75, 25.1, 0.14871866363451525),
    (-0.75, 40.0, -0.11392468528972473),
    (-0.75, 61.7, 0.07524427329911919),
    (-0.75, 150.0, 0.05993568434211126),
    (-0.25, 0.05, 2.050544525903637),
    (-0.25, 0.7, 0.893646070946695),
    (-0.25, 1.0, 0.6693848172615745),
    (-0.25, 3.3, -0.42264804349742724),
    (-0.25, 7.9, 0.0995179032573909),
    (-0.25, 11.99, 0.12891061037138057),
    (-0.25, 12.01, 0.13259464702612803),
    (-0.25, 17.5, -0.03354200385591511),
    (-0.25, 24.9, 0.12926655598084152),
    (-0.25, 25.1, 0.14480486752041927),
    (-0.25, 40.0, -0.04148112277085401),
    (-0.25, 61.7, 0.00454147581673343),
    (-0.25, 150.0, 0.024226298619094415),
    (0.25, 0.05, 0.43847692870857535),
    (0.25, 0.7, 0.7676602864685531),
    (0.25, 1.0, 0.7522313333407901),
    (0.25, 3.3, -0.21884001026285327),
    (0.25, 7.9, 0.25820331638847005),
    (0.25, 11.99, -0.04383477607634296),
    (0.25, 12.01, -0.03926785290316656),
    (0.25, 17.5, -0.1564621363873518),
    (0.25, 24.9, 0.024871955158506962),
    (0.25, 25.1, 0.05553568255009422),
    (0.25, 40.0, 0.054911752342599734),
    (0.25, 61.7, -0.06854211525837457),
    (0.25, 150.0, -0.02563155618463481),
    (0.75, 0.05, 0.06838405226107304),
    (0.75, 0.7, 0.4612204114909852),
    (0.75, 1.0, 0.5586524932048917),
    (0.75, 3.3, 0.08291159686758949),
    (0.75, 7.9, 0.26915783341930033),
    (0.75, 11.99, -0.18834453029313686),
    (0.75, 12.01, -0.18549572238095582),
    (0.75, 17.5, -0.18826464470464055),
    (0.75, 24.9, -0.0928094159182104),
    (0.75, 25.1, -0.06483396347753306),
    (0.75, 40.0, 0.11888584531230383),
    (0.75, 61.7, -0.10145876312005944),
    (0.75, 150.0, -0.060434668469609945),
    (1.25, 0.05, 0.008771487960339991),
    (1.25, 0.7, 0.2249093607396503),
    (1.25, 1.0, 0.3314145508558904),
    (1.25, 3.3, 0.33252715763751056),
    (1.25, 7.9, 0.14210226723225935),
    (1.25, 11.99, -0.2290274751367136),
    (1.25, 12.01, -0.22938099175488452),
    (1.25, 17.5, -0.1157626003102375),
    (1.25, 24.9, -0.15721337883483477),
    (1.25, 25.1, -0.14761237513750142),
    (1.25, 40.0, 0.11461108219400723),
    (1.25, 61.7, -0.07579971993816599),
    (1.25, 150.0, -0.060021122862726706),
    (1.75, 0.05, 0.0009770419285541451),
    (1.75, 0.7, 0.09468338224827334),
    (1.75, 1.0, 0.16859392254576316),
    (1.75, 3.3, 0.4603351329826952),
    (1.75, 7.9, -0.04841198551954906),
    (1.75, 11.99, -0.15247331224291563),
    (1.75, 12.01, -0.15576230594131815),
    (1.75, 17.5, 0.01740503430980306),
    (1.75, 24.9, -0.13485748465061323),
    (1.75, 25.1, -0.14867940717047104),
    (1.75, 40.0, 0.0459393419700654),
    (1.75, 61.7, -0.007008058388533902),
    (1.75, 150.0, -0.024830645303790512),
    (2.75, 0.05, 8.88273771712315e-06),
    (2.75, 0.7, 0.012196499750381529),
    (2.75, 1.0, 0.031426235705279346),
    (2.75, 3.3, 0.4053226350837539),
    (2.75, 7.9, -0.29060618143429046),
    (2.75, 11.99, 0.14383605716134332),
    (2.75, 12.01, 0.14010287718573405),
    (2.75, 17.5, 0.19174565156660117),
    (2.75, 24.9, 0.07385354458177881),
    (2.75, 25.1, 0.044101775226670574),
    (2.75, 40.0, -0.1148661528899231),
    (2.75, 61.7, 0.10106122334113127),
    (2.75, 150.0, 0.05985528674585483),
    (4.75, 0.05, 3.1169307689709364e-10),
    (4.75, 0.7, 8.484290227781946e-05),
    (4.75, 1.0, 0.0004515680442699656),
    (4.75, 3.3, 0.08377416527282497),
    (4.75, 7.9, 0.14449025702904772),
    (4.75, 11.99, -0.007188962721720641),
    (4.75, 12.01, -0.0027656638062663126),
    (4.75, 17.5, -0.1733779866720358),
    (4.75, 24.9, -0.02832025645336089),
    (4.75, 25.1, 0.0032119128543778726),
    (4.75, 40.0, 0.10329113326634251),
    (4.75, 61.7, -0.09911429172973306),
    (4.75, 150.0, -0.058504019788297904),
    (0.3333333333333333, 0.05, 0.3272916400195506),
    (0.3333333333333333, 0.7, 0.7185626817692193),
    (0.3333333333333333, 1.0, 0.730876402169448),
    (0.3333333333333333, 3.3, -0.1705405104836747),
    (0.3333333333333333, 7.9, 0.2711241071043349),
    (0.3333333333333333, 11.99, -0.07254180620164535),
    (0.3333333333333333, 12.01, -0.06809575507644865),
    (0.3333333333333333, 17.5, -0.1692393640640837),
    (0.3333333333333333, 24.9, 0.004200019348248187),
    (0.3333333333333333, 25.1, 0.035730475018115576),
    (0.3333333333333333, 40.0, 0.06920294281885805),
    (0.3333333333333333, 61.7, -0.07771508050473272),
    (0.3333333333333333, 150.0, -0.03322078087900419),
    (-0.3333333333333333, 0.05, 2.5232265152746973),
    (-0.3333333333333333, 0.7, 0.8623191508530804),
    (-0.3333333333333333, 1.0, 0.6068875050465293),
    (-0.3333333333333333, 3.3, -0.4346268313431347),
    (-0.3333333333333333, 7.9, 0.06316226025037198),
    (-0.3333333333333333, 11.99, 0.15308631671618486),
    (-0.3333333333333333, 12.01, 0.15636981510925158),
    (-0.3333333333333333, 17.5, -0.008487705368381844),
    (-0.3333333333333333, 24.9, 0.14051937971511486),
    (-0.3333333333333333, 25.1, 0.15226356903701688),
    (-0.3333333333333333, 40.0, -0.056745765527898624),
    (-0.3333333333333333, 61.7, 0.01778717293280346),
    (-0.3333333333333333, 150.0, 0.03192180327251631),
];

pub const PCFD: &[(f64, f64, f64, f64, f64)] = &[
    (-1.5, 0.3535533905932738, 0.3535533905932738, 0.7466437429012753, -0.30213917551705494),
    (-1.5, 1.4142135623730951, 1.4142135623730951, -0.08421885338579249, -0.2910751307765392),
    (-1.5, 2.7577164466275352, 2.7577164466275352, 0.019259371252358923, 0.1256861670622278),
    (-1.5, 2.8991378028648445, 2.8991378028648445, 0.063088141455659, 0.10015122568441234),
    (-1.5, 4.242640687119285, 4.242640687119285, -0.05174042504189418, 0.04374772230803991),
    (-1.5, 7.000357133746821, 7.000357133746821, 0.027702761206463828, -0.016185385057868356),
    (-1.5, 7.14177848998413, 7.14177848998413, 0.0012853232774933394, -0.031110995095012525),
    (-1.5, 10.606601717798213, 10.606601717798213, 0.011083870542648002, -0.013167320706316219),
    (-1.5, 17.67766952966369, 17.67766952966369, 0.007527237153312541, -0.002709032647540095),
    (-1.5, 21.213203435596427, 21.213203435596427, 0.006084704776196233, 0.00011353613352324403),
    (-1.5, 0.3535533905932738, -0.3535533905932738, 0.7466437429012753, 0.30213917551705494),
    (-1.5, 1.4142135623730951, -1.4142135623730951, -0.08421885338579249, 0.2910751307765392),
    (-1.5, 2.7577164466275352, -2.7577164466275352, 0.019259371252358923, -0.1256861670622278),
    (-1.5, 2.8991378028648445, -2.8991378028648445, 0.063088141455659, -0.10015122568441234),
    (-1.5, 4.242640687119285, -4.242640687119285, -0.05174042504189418, -0.04374772230803991),
    (-1.5, 7.000357133746821, -7.000357133746821, 0.027702761206463828, 0.016185385057868356),
    (-1.5, 7.14177848998413, -7.14177848998413, 0.0012853232774933394, 0.031110995095012525),
    (-1.5, 10.606601717798213, -10.606601717798213, 0.011083870542648002, 0.013167320706316219),
    (-1.5, 17.67766952966369, -17.67766952966369, 0.007527237153312541, 0.002709032647540095),
    (-1.5, 21.213203435596427, -21.213203435596427, 0.006084704776196233, -0.00011353613352324403),
    (-1.5, -0.3535533905932738, 0.3535533905932738, 1.569749193099054, -0.5925962863060455),
    (-1.5, -1.4142135623730951, 1.4142135623730951, 0.30831701500217706, -4.062203789207342),
    (-1.5, -2.7577164466275352, 2.7577164466275352, -2.5979252932574863, 4.899246716026807),
    (-1.5, -2.8991378028648445, 2.8991378028648445, -0.5277865228687231, 5.75814871594816),
    (-1.5, -4.242640687119285, 4.242640687119285, -6.882281882990461, -0.2499720474183684),
    (-1.5, -7.000357133746821, 7.000357133746821, 8.636125721600813, 2.1108665408759117),
    (-1.5, -7.14177848998413, 7.14177848998413, 6.461581189241383, -6.2153767466439955),
    (-1.5, -10.606601717798213, 10.606601717798213, 10.892344338199552, -1.0235213288014073),
    (-1.5, -17.67766952966369, 17.67766952966369, 12.812023300487581, 5.989396779897901),
    (-1.5, -21.213203435596427, 21.213203435596427, 10.773059468837056, 11.139085648101933),
    (-1.5, -0.3535533905932738, -0.3535533905932738, 1.569749193099054, 0.5925962863060455),
    (-1.5, -1.4142135623730951, -1.4142135623730951, 0.30831701500217706, 4.062203789207342),
    (-1.5, -2.7577164466275352, -2.7577164466275352, -2.5979252932574863, -4.899246716026807),
    (-1.5, -2.8991378028648445, -2.8991378028648445, -0.5277865228687231, -5.75814871594816),
    (-1.5, -4.242640687119285, -4.242640687119285, -6.882281882990461, 0.2499720474183684),
    (-1.5, -7.000357133746821, -7.000357133746821, 8.636125721600813, -2.1108665408759117),
    (-1.5, -7.14177848998413, -7.14177848998413, 6.461581189241383, 6.2153767466439955),
    (-1.5, -10.606601717798213, -10.606601717798213, 10.892344338199552, 1.0235213288014073),
    (-1.5, -17.67766952966369, -17.67766952966369, 12.812023300487581, -5.989396779897901),
    (-1.5, -21.213203435596427, -21.213203435596427, 10.773059468837056, -11.139085648101933),
    (-1.5, -7.949817857469881, -11.065666168666551, -53386.697529484125, -8397.942680118405),
    (-1.5, -19.951343547500656, -9.764160465965707, -9.527862453174863e+33, -2.3564191419119048e+33),
    (-1.5, 12.882466671219545, -14.485405604741976, 645.4405931961358, 211.73524844158015),
    (-1.5, 4.083579924312646, 0.19092415415993436, 0.0015426304731453884, -0.0007489509819978273),
    (-1.5, 2.7543338856311546, -1.2198370384976596, -0.021456470959006605, 0.02955914104481808),
    (-1.5, -3.92041132891939, -2.5126760392386425, 28.271588050403437, -51.336132630654646),
    (-1.5, -7.646709923188396, 14.585386451673573, -628601845701087.2, 560548896529352.94),
    (-1.5, -1.1632282272295034, -6.852705345740724, 1048.886373525322, -4965.150451273776),
    (-1.5, -20.490078516732122, 6.985282260836273, -2.1968963438681267e+41, -1.2804186694377632e+41),
    (-1.5, 16.264070559798533, -12.342877617529604, 4.936073672301844e-15, 5.1975995409342085e-15),
    (-1.5, -28.245001901376302, -8.511407904537188, 4.9219529838388326e+79, 7.155520999653178e+79),
    (-1.5, 6.640682272952394, -26.129888641792764, 1.1243197120830272e+67, 1.1060234233806927e+67),
    (-1.5, -5.712171588240546, -5.216881225673878, -27.589861822645133, 12.865963730625703),
    (-1.5, -5.315799309047649, 12.049403770315, -75482897083.237, -72345382502.97705),
    (-1.5, 7.893385147987572, 4.443349522109561, 7.333039085902898e-07, 4.6257077617264644e-07),
    (-1.5, 15.24743592694275, -15.75441473493791, -0.17209015599444308, 0.4647622299256389),
    (-1.5, -18.17246059521808, -7.565965332212013, 5.396289488220143e+30, -9.343548219857869e+29),
    (-1.5, -1.138367973636289, -4.0082535636442715, 4.228804632469987, 2.8354953848492146),
    (-1.5, 20.581130803368037, -10.067794904922778, -7.720013634920657e-38, -5.39992447754032e-38),
    (-1.5, 11.457162897070445, 6.830455300293206, -8.108543322800651e-12, -1.0530299464508714e-11),
    (-1.5, 5.303155539159403, -16.40310642841319, 3.5421838844870105e+23, 1.9965906574704535e+24),
    (-1.5, 8.044121078840396, 24.235168048044642, 1.6350954961144912e+54, 3.99038690621824e+54),
    (-1.5, 9.979135331093316, 5.039192312387154, 1.7859744830187433e-10, -1.5053484281808624e-10),
    (-1.5, -13.527153019886674, 13.50380069834239, -11.771030321801131, 8.416212363930406),
    (-1.5, 5.679984691915144, -23.375405446806244, 4.205110594753302e+53, -3.7778459873537116e+53),
    (-1.5, -21.80916628377979, -19.98699614630958, -56493642.246175036, -2856985770.904211),
    (-1.5, -0.7308409260574494, 16.27783626905795, -7.294522648987868e+26, -2.934844879034159e+26),
    (-1.5, 8.004528151480834, -0.555980613631524, -3.5006303037833647e-09, 3.722372238489734e-09),
    (-1.5, 1.5277157307151117, 2.706585452238923, -0.6330827276821605, 0.20646111201804956),
    (-1.5, 22.289346084445725, 11.010920788140865, -8.5965603197843e-44, 1.0332640269464203e-43),
    (-1.5, 10.657636454720041, -25.16995794450647, -1.3950772719438406e+54, -1.4114236947996413e+54),
    (-1.5, 19.290841806724977, 12.998691082136435, 6.412468112792147e-25, -4.390371852795883e-25),
    (-1.5, 19.71569365912707, -5.566374730865938, 4.6705247263932494e-42, -1.4833073313200846e-41),
    (-1.5, -24.96464558471432, 9.04437267502148, 8.88556571670926e+59, 2.54668455139687e+58),
    (-1.5, 9.138405406272874, 15.266014760710826, -131761746631414.52, -188718226641069.12),
    (-1.5, 1.2660428883523114, 4.024466499542262, -1.652325741071891, 4.54600279682208),
    (-1.5, -22.10070046122713, 0.9593189703077377, -4.1435657451530895e+53, 1.058711597660881e+54),
    (-1.5, 5.639987433154621, -25.536520334614913, 3.5593103346005227e+64, -1.6348083062232867e+65),
    (-1.5, 7.5338000828273115, 13.433300875284047, -152622534494.1066, -420323605229.5663),
    (-1.5, 2.050201443562543, -0.5031868767939592, 0.06611139295331488, 0.06522584532453582),
    (-2.5, 0.3535533905932738, 0.3535533905932738, 0.4256746722691932, -0.24169352641042338),
    (-2.5, 1.4142135623730951, 1.4142135623730951, -0.08015810663037211, -0.09060121299762273),
    (-2.5, 2.7577164466275352, 2.7577164466275352, 0.022297804303091726, 0.022018052525570743),
    (-2.5, 2.8991378028648445, 2.8991378028648445, 0.02615052054602679, 0.00976669493752419),
    (-2.5, 4.242640687119285, 4.242640687119285, -0.001684889849365421, 0.011068374937905653),
    (-2.5, 7.000357133746821, 7.000357133746821, 0.0009008897463549237, -0.003108987732554248),
    (-2.5, 7.14177848998413, 7.14177848998413, -0.002029816950280971, -0.0023157674118542046),
    (-2.5, 10.606601717798213, 10.606601717798213, -8.549632749373278e-05, -0.0011439641772386375),
    (-2.5, 17.67766952966369, 17.67766952966369, 0.00013743211964954843, -0.0002889692710784432),
    (-2.5, 21.213203435596427, 21.213203435596427, 0.00014648215861594958, -0.00014033339802478243),
    (-2.5, 0.3535533905932738, -0.3535533905932738, 0.4256746722691932, 0.24169352641042338),
    (-2.5, 1.4142135623730951, -1.4142135623730951, -0.08015810663037211, 0.09060121299762273),
    (-2.5, 2.7577164466275352, -2.7577164466275352, 0.022297804303091726, -0.022018052525570743),
    (-2.5, 2.8991378028648445, -2.8991378028648445, 0.02615052054602679, -0.00976669493752419),
    (-2.5, 4.242640687119285, -4.242640687119285, -0.001684889849365421, -0.011068374937905653),
    (-2.5, 7.000357133746821, -7.000357133746821, 0.0009008897463549237, 0.003108987732554248),
    (-2.5, 7.14177848998413, -7.14177848998413, -0.002029816950280971, 0.0023157674118542046),
    (-2.5, 10.606601717798213, -10.606601717798213, -8.549632749373278e-05, 0.0011439641772386375),
    (-2.5, 17.67766952966369, -17.67766952966369, 0.00013743211964954843, 0.0002889692710784432),
    (-2.5, 21.213203435596427, -21.213203435596427, 0.00014648215861594958, 0.00014033339802478243),
    (-2.5, -0.3535533905932738, 0.3535533905932738, 1.177037915931424, -0.646592512373639),
    (-2.5, -1.4142135623730951, 1.4142135623730951, -2.5354669807598746, -4.56499830514847),
    (-2.5, -2.7577164466275352, 2.7577164466275352, 3.4805681136717204, 14.07188021790845),
    (-2.5, -2.8991378028648445, 2.8991378028648445, 9.413005749117843, 12.47446395987472),
    (-2.5, -4.242640687119285, 4.242640687119285, -20.421749828702517, 18.74746663637849),
    (-2.5, -7.000357133746821, 7.000357133746821, 50.25962896932582, -30.402121593766307),
    (-2.5, -7.14177848998413, 7.14177848998413, 1.6130827877796698, -60.50167166499552),
    (-2.5, -10.606601717798213, 10.606601717798213, 69.9862654073994, -84.2737703500106),
    (-2.5, -17.67766952966369, 17.67766952966369, 221.58464537748492, -80.34893052148722),
    (-2.5, -21.213203435596427, 21.213203435596427, 309.79408754920894, 5.2639078991757335),
    (-2.5, -0.3535533905932738, -0.3535533905932738, 1.177037915931424, 0.646592512373639),
    (-2.5, -1.4142135623730951, -1.4142135623730951, -2.5354669807598746, 4.56499830514847),
    (-2.5, -2.7577164466275352, -2.7577164466275352, 3.4805681136717204, -14.07188021790845),
    (-2.5, -2.8991378028648445, -2.8991378028648445, 9.413005749117843, -12.47446395987472),
    (-2.5, -4.242640687119285, -4.242640687119285, -20.421749828702517, -18.74746663637849),
    (-2.5, -7.000357133746821, -7.000357133746821, 50.25962896932582, 30.402121593766307),
    (-2.5, -7.14177848998413, -7.14177848998413, 1.6130827877796698, 60.50167166499552),
    (-2.5, -10.606601717798213, -10.606601717798213, 69.9862654073994, 84.2737703500106),
    (-2.5, -17.67766952966369, -17.67766952966369, 221.58464537748492, 80.34893052148722),
    (-2.5, -21.213203435596427, -21.213203435596427, 309.79408754920894, -5.2639078991757335),
    (-2.5, -7.949817857469881, -11.065666168666551, 2834.3752992775603, -2797.3659241396226),
    (-2.5, -19.951343547500656, -9.764160465965707, -1.1153416926190078e+35, -9.333231281343352e+34),
    (-2.5, 12.882466671219545, -14.485405604741976, 14.187348120715813, 32.06747281515741),
    (-2.5, 4.083579924312646, 0.19092415415993436, 0.00032842758119346884, -0.00017495124169017892),
    (-2.5, 2.7543338856311546, -1.2198370384976596, -0.008213894248547958, 0.006182838573884705),
    (-2.5, -3.92041132891939, -2.5126760392386425, 159.481817507399, -91.0115825466803),
    (-2.5, -7.646709923188396, 14.585386451673573, 48256965286774.625, 17722107287173.465),
    (-2.5, -1.1632282272295034, -6.852705345740724, 710.0149963933787, 298.155895672546),
    (-2.5, -20.490078516732122, 6.985282260836273, -3.5998101513710376e+42, -7.289576920433171e+41),
    (-2.5, 16.264070559798533, -12.342877617529604, 4.062115646046374e-17, 3.4812523452625236e-16),
    (-2.5, -28.245001901376302, -8.511407904537188, 5.21546447455654e+80, 1.6272834342467762e+81),
    (-2.5, 6.640682272952394, -26.129888641792764, -2.9493502283069682e+65, 5.07248551389268e+65),
    (-2.5, -5.712171588240546, -5.216881225673878, -150.28007797816812, -45.80060165121043),
    (-2.5, -5.315799309047649, 12.049403770315, -2655404558.795408, 7563369012.057857),
    (-2.5, 7.893385147987572, 4.443349522109561, 9.389254561676058e-08, 7.014105048809005e-09),
    (-2.5, 15.24743592694275, -15.75441473493791, -0.02064608194631589, 0.009210680188272478),
    (-2.5, -18.17246059521808, -7.565965332212013, 7.0167073298099685e+31, 1.5849228610113767e+31),
    (-2.5, -1.138367973636289, -4.0082535636442715, -1.3547898552501807, 0.4418218200347647),
    (-2.5, 20.581130803368037, -10.067794904922778, -1.9985880885097283e-39, -3.5797781237514805e-39),
    (-2.5, 11.457162897070445, 6.830455300293206, -9.156071744680834e-13, -3.753484936907514e-13),
    (-2.5, 5.303155539159403, -16.40310642841319, -1.0431362586349336e+23, 5.6087420330687565e+22),
    (-2.5, 8.044121078840396, 24.235168048044642, 1.6903090977936106e+53, -1.118813020248387e+52),
    (-2.5, 9.979135331093316, 5.039192312387154, 8.384065794081932e-12, -1.8864028390305468e-11),
    (-2.5, -13.527153019886674, 13.50380069834239, -30.709743618738436, 181.93182197542438),
    (-2.5, 5.679984691915144, -23.375405446806244, 1.9489874825986903e+52, 1.3290504781716807e+52),
    (-2.5, -21.80916628377979, -19.98699614630958, 37224755544.916855, -42315035674.566826),
    (-2.5, -0.7308409260574494, 16.27783626905795, -1.6098618240567323e+25, 4.598129126448085e+25),
    (-2.5, 8.004528151480834, -0.555980613631524, -4.4888620573134097e-10, 4.193947826916968e-10),
    (-2.5, 1.5277157307151117, 2.706585452238923, -0.09619882651172887, 0.1959442940544768),
    (-2.5, 22.289346084445725, 11.010920788140865, -1.2730157468990645e-45, 5.240870335652641e-45),
    (-2.5, 10.657636454720041, -25.16995794450647, 2.7550690755784427e+52, -6.735726664293312e+52),
    (-2.5, 19.290841806724977, 12.998691082136435, 1.2424333798768375e-26, -3.094924370026325e-26),
    (-2.5, 19.71569365912707, -5.566374730865938, 4.121078859671487e-43, -6.329269041815999e-43),
    (-2.5, -24.96464558471432, 9.04437267502148, 1.4952270248069938e+61, -4.9296702312565505e+60),
    (-2.5, 9.138405406272874, 15.266014760710826, -12957932452939.23, 818155553660.3387),
    (-2.5, 1.2660428883523114, 4.024466499542262, 0.9052016226609579, 0.9021246835746815),
    (-2.5, -22.10070046122713, 0.9593189703077377, -5.434890345348518e+54, 1.5879527942742427e+55),
    (-2.5, 5.639987433154621, -25.536520334614913, 6.4189255922121606e+63, -2.9235387767473e+61),
    (-2.5, 7.5338000828273115, 13.433300875284047, -28760434283.372128, -4996082003.925239),
    (-2.5, 2.050201443562543, -0.5031868767939592, 0.019582200463438816, 0.02569579876053409),
];
