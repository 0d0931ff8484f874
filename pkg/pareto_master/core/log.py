"""로깅 설정 모듈"""

from loguru import logger

from .config import config


def setup_logging(level: str | None = None) -> None:
    """실행 로그를 파일로 저장 (stdout 결과물과 분리)"""
    log_dir = config.LOG_DIR
    log_dir.mkdir(parents=True, exist_ok=True)
    log_path = log_dir / "runtime.log"

    # 기본 stderr 핸들러 제거 (결과 출력 오염 방지)
    logger.remove()

    # 파일 핸들러 추가 (rotation, retention 자동 지원)
    logger.add(
        log_path,
        format="{time:YYYY-MM-DD HH:mm:ss} {level} {name}: {message}",
        level=level or config.LOG_LEVEL,
        rotation="5 MB",
        retention=5,
        encoding="utf-8",
    )
