"""Configuration settings for the designcraft workbench."""

# 有限域配置
FIELD_CONFIG = {
    'min_m': 3,
    'max_m': 31,
}

# 穷举配置
ENUMERATION_CONFIG = {
    'budget_exponent': 28,  # 最多枚举 2^28 个码字
    'budget_env_var': 'DESIGNCRAFT_BUDGET',  # 十进制指数，覆盖 budget_exponent
    'base_table_bits': 16,  # 每个向量化块包含 2^16 个码字
    'threads': None,  # None 表示使用全部 CPU
}

# 设计验证配置
DESIGN_CONFIG = {
    'counter_budget': 10 ** 7,  # t-子集计数器上限
    'work_budget': 1 << 32,  # 区组数 × C(k, t) 上限，超出则记为 SKIPPED-budget
    'batch_entries': 1 << 22,  # 每批次排名条目数
}

# 报告配置
REPORT_CONFIG = {
    # 已知的公式不一致：扩展对偶码重量 8 的区组数公式
    'known_discrepancies': (
        'extended_dual.block_count.k8',
    ),
    'timestamp_format': '%Y-%m-%dT%H:%M:%S',
}

# 日志配置
LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
}

# 文件路径
FILE_PATHS = {
    'code': 'code.txt',
    'blocks': 'blocks.txt',
    'report': 'verification_report.txt',
}
