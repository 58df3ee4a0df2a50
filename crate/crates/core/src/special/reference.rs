// Reference values from mpmath at 40 digits.
pub(super) const BESSEL_J: &[(i64, f64, f64)] = &[
    (0, 0.001, 0.999999750000015625),
    (0, 0.1, 0.99750156206604003228),
    (0, 1.0, 0.76519768655796655145),
    (0, 2.5, -0.048383776468197996327),
    (0, 10.0, -0.2459357644513483352),
    (0, 24.9, 0.083245968353015681694),
    (0, 25.0, 0.096266783275958116174),
    (0, 30.0, -0.086367983581040211336),
    (0, 100.0, 0.019985850304223122424),
    (0, 500.0, -0.034100556880731998265),
    (0, 1000.0, 0.024786686152420174561),
    (1, 0.001, 0.00049999993750000260417),
    (1, 0.1, 0.049937526036241997556),
    (1, 1.0, 0.44005058574493351596),
    (1, 2.5, 0.49709410246427403801),
    (1, 10.0, 0.04347274616886143667),
    (1, 24.9, -0.13485569953140874334),
    (1, 25.0, -0.12535024958028990465),
    (1, 30.0, -0.11875106261662293652),
    (1, 100.0, -0.077145352014112158033),
    (1, 500.0, 0.010472613470372292844),
    (1, 1000.0, 0.0047283119070895239176),
    (2, 0.001, 1.2499998958333365885e-7),
    (2, 0.1, 0.0012489586587999188454),
    (2, 1.0, 0.11490348493190048047),
    (2, 2.5, 0.44605905843961722674),
    (2, 10.0, 0.25463031368512062253),
    (2, 24.9, -0.094077751447907950235),
    (2, 25.0, -0.10629480324238130855),
    (2, 30.0, 0.078451246073265348901),
    (2, 100.0, -0.021528757344505365585),
    (2, 500.0, 0.034142447334613487437),
    (2, 1000.0, -0.024777229528605995513),
    (5, 0.001, 2.6041665581597241598e-19),
    (5, 0.1, 2.603081790964440834e-9),
    (5, 1.0, 0.00024975773021123443138),
    (5, 2.5, 0.019501625134503219886),
    (5, 10.0, -0.23406152818679364044),
    (5, 24.9, -0.080246762733942249418),
    (5, 25.0, -0.066007995398422993392),
    (5, 30.0, -0.14324029551207707699),
    (5, 100.0, -0.074195736964513920834),
    (5, 500.0, 0.0096512364353543636321),
    (5, 1000.0, 0.0050254069452331860742),
    (10, 0.001, 2.6911443943049987833e-40),
    (10, 0.1, 2.6905328954342155795e-20),
    (10, 1.0, 2.630615123687453207e-10),
    (10, 2.5, 2.2247284173983832948e-6),
    (10, 10.0, 0.2074861066333588577),
    (10, 24.9, -0.088688801558025489131),
    (10, 25.0, -0.075179843948523283841),
    (10, 30.0, -0.12987689399858876819),
    (10, 100.0, -0.054732176935472014742),
    (10, 500.0, 0.034982637503815106764),
    (10, 1000.0, -0.024520622306036558192),
    (20, 0.001, 3.9199043029592633038e-85),
    (20, 0.1, 3.9194377208586176573e-45),
    (20, 1.0, 3.8735030085246577189e-25),
    (20, 2.5, 3.3090793836587766837e-17),
    (20, 10.0, 0.000011513369247813397783),
    (20, 24.9, 0.06422099357756943503),
    (20, 25.0, 0.05199404922830323178),
    (20, 30.0, 0.0048310199934040645386),
    (20, 100.0, 0.062217458498338753141),
    (20, 500.0, -0.035514222915127349391),
    (20, 1000.0, 0.023357967932679334591),
    (50, 0.001, 2.9202857026040609553e-230),
    (50, 0.1, 2.9201425690996356583e-130),
    (50, 1.0, 2.9060049481732393945e-80),
    (50, 2.5, 2.2341702499526218344e-60),
    (50, 10.0, 1.7845136078715953063e-30),
    (50, 24.9, 8.1955154476114702914e-12),
    (50, 25.0, 9.7561594280229815309e-12),
    (50, 30.0, 2.0581656631564178102e-8),
    (50, 100.0, -0.038698339728525383467),
    (50, 500.0, -0.021144561727588721987),
    (50, 1000.0, -0.0033360489606152764062),
    (100, 0.1, 8.4525165351217421327e-289),
    (100, 1.0, 8.4318287896267085492e-189),
    (100, 2.5, 5.1793883053015715678e-149),
    (100, 10.0, 6.5973160641553809722e-89),
    (100, 24.9, 7.5043432138239930049e-50),
    (100, 25.0, 1.1064482655301666468e-49),
    (100, 30.0, 4.5788015281752445296e-42),
    (100, 100.0, 0.096366673295861559674),
    (100, 500.0, 0.034329532854951521455),
    (100, 1000.0, 0.011676135007802554492),
    (200, 10.0, 6.9675301553935444557e-236),
    (200, 24.9, 6.3303832382282411238e-157),
    (200, 25.0, 1.4023501726295699184e-156),
    (200, 30.0, 6.8211185702446325402e-141),
    (200, 100.0, 2.0594424939411678724e-41),
    (200, 500.0, 0.031202198153727847088),
    (200, 1000.0, 0.0041835315250220756455),
];
pub(super) const BESSEL_Y: &[(i64, f64, f64)] = &[
    (0, 0.001, -4.471416611375923269),
    (0, 0.1, -1.5342386513503668441),
    (0, 1.0, 0.088256964215676957983),
    (0, 2.5, 0.49807035961523188783),
    (0, 10.0, 0.055671167283599391424),
    (0, 24.9, -0.13649918399676511316),
    (0, 25.0, -0.12724943226800613783),
    (0, 30.0, -0.11729573168666402525),
    (0, 100.0, -0.077244313365083152254),
    (0, 500.0, 0.0105067087398313741),
    (0, 1000.0, 0.0047159179776228133998),
    (1, 0.001, -636.62216723113942807),
    (1, 0.1, -6.4589510947020269877),
    (1, 1.0, -0.78121282130028871655),
    (1, 2.5, 0.14591813796678579888),
    (1, 10.0, 0.24901542420695388392),
    (1, 24.9, -0.086002557595554441547),
    (1, 25.0, -0.098829964783237410053),
    (1, 30.0, 0.084425570661747234891),
    (1, 100.0, -0.020372312002759793305),
    (1, 500.0, 0.034111080629137135895),
    (1, 1000.0, -0.024784331292351778915),
    (2, 0.001, -1273239.8630456674802),
    (2, 0.1, -127.64478324269017291),
    (2, 1.0, -1.6506826068162543911),
    (2, 2.5, -0.38133584924180324872),
    (2, 10.0, -0.0058680824422086146398),
    (2, 24.9, 0.12959134804531495721),
    (2, 25.0, 0.11934303508534714503),
    (2, 30.0, 0.12292410306411384091),
    (2, 100.0, 0.076836867125027956388),
    (2, 500.0, -0.010370264417314825556),
    (2, 1000.0, -0.0047654866402075169576),
    (5, 0.001, -244462007868026409.18),
    (5, 0.1, -24461484.50230391535),
    (5, 1.0, -260.40586662581222072),
    (5, 2.5, -3.830176000740751863),
    (5, 10.0, 0.1354030476893623032),
    (5, 24.9, -0.14018638276614221864),
    (5, 25.0, -0.14705799311372266086),
    (5, 30.0, 0.031627359289264433312),
    (5, 100.0, -0.029480196281661895696),
    (5, 500.0, 0.034353401718945752382),
    (5, 1000.0, -0.024725956719740690746),
    (10, 0.001, -1.1828049377990416564e+38),
    (10, 0.1, -1183133513204519788.5),
    (10, 1.0, -121618014.27868918929),
    (10, 2.5, -14782.847716021067994),
    (10, 10.0, -0.35981415218340272205),
    (10, 24.9, -0.14154908531382968745),
    (10, 25.0, -0.14871839049980649757),
    (10, 30.0, 0.075056702122397113289),
    (10, 100.0, 0.058331574236414928754),
    (10, 500.0, -0.0070504399730159792505),
    (10, 1000.0, -0.0059490005741626685808),
    (20, 0.001, -4.0601742030076187182e+82),
    (20, 0.1, -4.0607084201263722183e+42),
    (20, 1.0, -4.1139703148355052801e+22),
    (20, 2.5, -484776559582090.09576),
    (20, 10.0, -1597.483848269625981),
    (20, 24.9, 0.19556675860860550738),
    (20, 25.0, 0.19804074776289243611),
    (20, 30.0, -0.16848153948742676694),
    (20, 100.0, 0.051247973076188424211),
    (20, 500.0, -0.0036053691568370722023),
    (20, 1000.0, 0.009547376014987301682),
    (50, 0.001, -2.1799914026469163551e+227),
    (50, 0.1, -2.1801026184716102597e+127),
    (50, 1.0, -2.1911428126053389736e+77),
    (50, 2.5, -2.8530384545826845723e+57),
    (50, 10.0, -3.6410665018007402124e+27),
    (50, 24.9, -895880446.95919865507),
    (50, 25.0, -753573251.4466261627),
    (50, 30.0, -386759.32602734734359),
    (50, 100.0, 0.076505263944803040444),
    (50, 500.0, 0.028854128195237852074),
    (50, 1000.0, -0.025025741518044503708),
    (100, 0.1, -3.7658612560192481854e+285),
    (100, 1.0, -3.7752878101105284001e+185),
    (100, 2.5, -6.1476258561375250648e+145),
    (100, 10.0, -4.8491482711806071288e+85),
    (100, 24.9, -4.379634902521008737e+46),
    (100, 25.0, -2.971221643256301784e+46),
    (100, 30.0, -7.28752847082447147e+38),
    (100, 100.0, -0.16692141141757650654),
    (100, 500.0, 0.010998954077227787089),
    (100, 1000.0, -0.022438688257723274062),
    (200, 10.0, -2.2870983266036090323e+232),
    (200, 24.9, -2.5338588131384419977e+153),
    (200, 25.0, -1.143887886349907511e+153),
    (200, 30.0, -2.3599689078865490758e+137),
    (200, 100.0, -8.9236648125530524039e+37),
    (200, 500.0, -0.020387229938128041585),
    (200, 1000.0, 0.025144488299691111365),
];
pub(super) const HALF_ORDER: &[(f64, f64, Option<f64>, Option<f64>)] = &[
    (
        -1.5,
        0.1,
        Some(-25.357166629911094089),
        Some(-0.0084020343015001428999),
    ),
    (
        -1.5,
        1.0,
        Some(-1.1024955751601791699),
        Some(-0.2402978391234270109),
    ),
    (
        -1.5,
        7.3,
        Some(-0.27242437537684143859),
        Some(0.12095301097363056126),
    ),
    (
        -1.5,
        50.0,
        Some(0.027428136761913821705),
        Some(0.10947687298831803539),
    ),
    (
        -1.5,
        1000.0,
        Some(-0.020877456174464755024),
        Some(0.014168706104322200496),
    ),
    (
        -0.5,
        0.1,
        Some(2.5105273689585093144),
        Some(0.25189294032600094573),
    ),
    (
        -0.5,
        1.0,
        Some(0.43109886801837607952),
        Some(0.67139670714180309042),
    ),
    (
        -0.5,
        7.3,
        Some(0.15535612258308556108),
        Some(0.25114271474902149872),
    ),
    (
        -0.5,
        50.0,
        Some(0.10888475635053954314),
        Some(-0.029605831888924612568),
    ),
    (
        -0.5,
        1000.0,
        Some(0.014189569370927294323),
        Some(0.02086326660509382773),
    ),
    (
        0.5,
        0.1,
        Some(0.25189294032600094573),
        Some(-2.5105273689585093144),
    ),
    (
        0.5,
        1.0,
        Some(0.67139670714180309042),
        Some(-0.43109886801837607952),
    ),
    (
        0.5,
        7.3,
        Some(0.25114271474902149872),
        Some(-0.15535612258308556108),
    ),
    (
        0.5,
        50.0,
        Some(-0.029605831888924612568),
        Some(-0.10888475635053954314),
    ),
    (
        0.5,
        1000.0,
        Some(0.02086326660509382773),
        Some(-0.014189569370927294323),
    ),
    (
        1.5,
        0.1,
        Some(0.0084020343015001428999),
        Some(-25.357166629911094089),
    ),
    (
        1.5,
        1.0,
        Some(0.2402978391234270109),
        Some(-1.1024955751601791699),
    ),
    (
        1.5,
        7.3,
        Some(-0.12095301097363056126),
        Some(-0.27242437537684143859),
    ),
    (
        1.5,
        50.0,
        Some(-0.10947687298831803539),
        Some(0.027428136761913821705),
    ),
    (
        1.5,
        1000.0,
        Some(-0.014168706104322200496),
        Some(-0.020877456174464755024),
    ),
    (
        5.5,
        0.1,
        Some(2.4263225090506745201e-10),
        Some(-238568535.11282212633),
    ),
    (
        5.5,
        1.0,
        Some(0.000073853119385948078433),
        Some(-797.43801943617948198),
    ),
    (
        5.5,
        7.3,
        Some(0.35540263859150505979),
        Some(0.0015471434951826335275),
    ),
    (
        5.5,
        50.0,
        Some(-0.11311042345854331308),
        Some(-0.0039330400399558698661),
    ),
    (
        5.5,
        1000.0,
        Some(-0.01387513924302834095),
        Some(-0.021073913562774262588),
    ),
    (
        20.5,
        0.1,
        Some(1.9239118396845233587e-46),
        Some(-8.0707942972417522962e+43),
    ),
    (
        20.5,
        1.0,
        Some(6.0142908292586846696e-26),
        Some(-2.5848206145012727732e+23),
    ),
    (
        20.5,
        7.3,
        Some(1.6195735193688318335e-8),
        Some(-1026224.6480376441987),
    ),
    (
        20.5,
        50.0,
        Some(-0.089057494445934368323),
        Some(0.077629842353930453272),
    ),
    (
        20.5,
        1000.0,
        Some(0.02336539872445442156),
        Some(-0.0095295145150930797821),
    ),
    (
        100.5,
        0.1,
        Some(1.882989456360363952e-290),
        Some(-1.6820402825217202566e+287),
    ),
    (
        100.5,
        1.0,
        Some(5.9400333244521559919e-190),
        Some(-5.3323259223527990459e+186),
    ),
    (
        100.5,
        7.3,
        Some(3.0322544518566549298e-103),
        Some(-1.0472907404641707142e+100),
    ),
    (
        100.5,
        50.0,
        Some(5.749161042531236533e-22),
        Some(-6351042035602332483.7),
    ),
    (
        100.5,
        1000.0,
        Some(-0.0063901639529603826592),
        Some(-0.024474988493919557339),
    ),
];
pub(super) const SPHERICAL: &[(i32, f64, Option<f64>, Option<f64>)] = &[
    (
        0,
        0.01,
        Some(0.99998333341666646825),
        Some(-99.995000041666527778),
    ),
    (
        0,
        0.5,
        Some(0.95885107720840600055),
        Some(-1.7551651237807454322),
    ),
    (
        0,
        3.0,
        Some(0.047040002686622407367),
        Some(0.32999749886681515242),
    ),
    (
        0,
        20.0,
        Some(0.045647262536381382719),
        Some(-0.020404103090669599303),
    ),
    (
        0,
        200.0,
        Some(-0.0043664864860699729087),
        Some(-0.0024359383750350295518),
    ),
    (
        0,
        900.0,
        Some(0.0011086703049133005092),
        Some(-0.000073607446892397904635),
    ),
    (
        1,
        0.01,
        Some(0.0033333000001190473986),
        Some(-10000.499987500069444),
    ),
    (
        1,
        0.5,
        Some(0.16253703063606656886),
        Some(-4.469181324769896865),
    ),
    (
        1,
        3.0,
        Some(0.34567749976235595488),
        Some(0.062959163602315976774),
    ),
    (
        1,
        20.0,
        Some(-0.018121739963850530167),
        Some(-0.046667467690914862684),
    ),
    (
        1,
        200.0,
        Some(-0.0024577708074653794163),
        Some(0.0043543067941947977609),
    ),
    (
        1,
        900.0,
        Some(-0.000072375590998049792958),
        Some(-0.0011087520909654031736),
    ),
    (
        2,
        0.01,
        Some(6.6666190477513225509e-6),
        Some(-3000050.0012499791668),
    ),
    (
        2,
        0.5,
        Some(0.016371106607993412617),
        Some(-25.059922824838635758),
    ),
    (
        2,
        3.0,
        Some(0.29863749707573354751),
        Some(-0.26703833526449917565),
    ),
    (
        2,
        20.0,
        Some(-0.048365523530958962244),
        Some(0.013403982937032369901),
    ),
    (
        2,
        200.0,
        Some(0.0043296199239579922174),
        Some(0.0025012529769479515182),
    ),
    (
        2,
        900.0,
        Some(-0.0011089115568832940086),
        Some(0.000069911606589179894057),
    ),
    (
        3,
        0.01,
        Some(9.5237566138768637227e-9),
        Some(-1500015000.1250020833),
    ),
    (
        3,
        0.5,
        Some(0.001174035443867557309),
        Some(-246.13004692361646071),
    ),
    (
        3,
        3.0,
        Some(0.15205166203053329097),
        Some(-0.50802305570981460286),
    ),
    (
        3,
        20.0,
        Some(0.0060303590811107896062),
        Some(0.050018463425172955159),
    ),
    (
        3,
        200.0,
        Some(0.0025660113055643292218),
        Some(-0.004291775469771098973),
    ),
    (
        3,
        900.0,
        Some(0.000066214971237587048466),
        Some(0.0011091404887797875063),
    ),
    (
        10,
        0.01,
        Some(7.2730761345037871722e-31),
        Some(-6.5473079797378378407e+30),
    ),
    (
        10,
        0.5,
        Some(7.064123963661878184e-14),
        Some(-1349739281107.0558297),
    ),
    (
        10,
        3.0,
        Some(3.5260038931752563332e-6),
        Some(-4699.8591888113912008),
    ),
    (
        10,
        20.0,
        Some(0.03968669864462637131),
        Some(-0.036843410496289961749),
    ),
    (
        10,
        200.0,
        Some(0.0035431728903142449403),
        Some(0.0035327568031017205962),
    ),
    (
        10,
        900.0,
        Some(-0.0011111339097042469185),
        Some(5.7596014045747383943e-6),
    ),
    (
        30,
        0.01,
        Some(5.6111892403828455047e-103),
        Some(-2.9215631130472478895e+102),
    ),
    (
        30,
        0.5,
        Some(5.2154726081997028857e-52),
        Some(-6.2873106616509011667e+49),
    ),
    (
        30,
        3.0,
        Some(1.0755675258223256442e-28),
        Some(-5.1053397824294666095e+25),
    ),
    (
        30,
        20.0,
        Some(0.000021063576943610385277),
        Some(-51.61670075101688383),
    ),
    (
        30,
        200.0,
        Some(-0.0048000459492406408281),
        Some(0.0015017789786436439085),
    ),
    (
        30,
        900.0,
        Some(-0.0010005807715882528029),
        Some(-0.00048385469280813225194),
    ),
    (
        50,
        0.01,
        Some(3.6328663124458627205e-181),
        Some(-2.7253935162117609027e+180),
    ),
    (
        50,
        0.5,
        Some(3.2227215374275172541e-96),
        Some(-6.1447912922121701087e+93),
    ),
    (
        50,
        3.0,
        Some(2.4964934382729345924e-57),
        Some(-1.3243260716629771526e+54),
    ),
    (
        50,
        20.0,
        Some(5.6500807918725270296e-17),
        Some(-9542541667002.6216722),
    ),
    (
        50,
        200.0,
        Some(0.0040918093601097939265),
        Some(0.0030156555508961472599),
    ),
    (
        50,
        900.0,
        Some(-0.00024272693901633040887),
        Some(-0.0010851725357843255782),
    ),
    (150, 0.01, None, None),
    (150, 0.5, None, None),
    (
        150,
        3.0,
        Some(3.2267193758798380588e-238),
        Some(-3.4327119067134768687e+234),
    ),
    (
        150,
        20.0,
        Some(6.5198195913478211727e-115),
        Some(-2.5706157372172689444e+110),
    ),
    (
        150,
        200.0,
        Some(-0.004560110771794677777),
        Some(-0.0041425126979938651136),
    ),
    (
        150,
        900.0,
        Some(-0.0011187985879455660774),
        Some(0.000022120683501857051646),
    ),
];
