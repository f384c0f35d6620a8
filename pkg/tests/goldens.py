"""Published reference systems used as exact regression targets.

Root multisets only; certificates are recomputed by the validator.
"""

M1_N5_T2 = sorted([
    487111462076,
    461523666596,
    458176368356,
    1238143955524,
    501821857691,
])

M2_N5_12 = sorted([
    3023249,
    1006607,
    1231825,
    473569,
    3426367,
])

M1_N6_T2 = sorted([
    252608637530397000,
    15095604154947000,
    492116002633350000,
    669794768570400000,
    37271037420836643,
    43162876561115524,
])

M2_N6_12 = sorted([
    3520435290636,
    3205366606047,
    5429263880052,
    4996634759436,
    3039928895652,
    3341350001384,
])

M2_N7_21 = sorted([
    25765736424692698550940334744919576070938381815190280120023040,
    6618151217385566375461260055526447245711772332508510442036960,
    124934670757222453453275054167136958692122312064551132326904640,
    102408517408585640884244377393390888640073807969431822726302964,
    55568355668850822237272806729023622683498611696723291768084640,
    165356494031982641014133841865286335701791214944638697401416960,
    86777104483757139311236990507927175848789766997194052355054023,
])

M2_N8_21 = sorted([
    1793303948742806004358839863314163172496768,
    35647669259187200217596168619979944579248,
    1350335627724462794940009188342343291253664,
    509318278582178443295965724916222044316304,
    2125938053817649628168174016173670414131324,
    863449486628378007179143401686267952168368,
    2943648522151467304268140794140107220456896,
    70025522883762244048096185376403205296573,
])
